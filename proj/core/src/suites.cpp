#include "f4rep/suites.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "f4rep/algebra.hpp"
#include "f4rep/identity.hpp"
#include "f4rep/representation.hpp"
#include "f4rep/root_lattice.hpp"

namespace f4rep
{

namespace
{

class Recorder
{
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void check(std::string name, bool pass, std::string detail = {})
    {
        result_.checks.push_back({std::move(name), pass, std::move(detail)});
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

LatticeVector random_lattice_vector(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> d(-3, 3);
    LatticeVector v;
    for (auto &c : v.coords)
        c = d(rng);
    return v;
}

AlgebraElement random_element(std::mt19937_64 &rng, int nterms = 5)
{
    std::uniform_int_distribution<std::size_t> label(0, kE6Dim - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    AlgebraElement u;
    for (int i = 0; i < nterms; ++i)
        u.add_term(label(rng), coef(rng));
    return u;
}

AlgebraElement random_fixed_element(std::mt19937_64 &rng, int nterms = 4)
{
    const auto &labels = all_operator_labels();
    std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    AlgebraElement u;
    for (int i = 0; i < nterms; ++i)
        u += Rational(coef(rng)) * operator_element(labels[pick(rng)]);
    return u;
}

Polynomial random_polynomial(std::mt19937_64 &rng, int max_degree, int nterms)
{
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> var(1, kNumVars);
    std::uniform_int_distribution<int> coef(-4, 4);
    Polynomial p;
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        for (int d = deg(rng); d > 0; --d) {
            int v = var(rng);
            m.set_exponent(v, m.exponent(v) + 1);
        }
        p.add_term(m, coef(rng));
    }
    return p;
}

Derivation random_derivation(std::mt19937_64 &rng)
{
    std::uniform_int_distribution<int> var(1, kNumVars);
    Derivation d;
    for (int i = 0; i < 3; ++i)
        d.add_term(random_polynomial(rng, 2, 2), var(rng));
    return d;
}

std::string count_detail(std::size_t bad, std::size_t total)
{
    std::ostringstream os;
    os << bad << " failures out of " << total;
    return os.str();
}

} // namespace

bool SuiteResult::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

// ---------------------------------------------------------------------------

SuiteResult lattice_suite(std::uint64_t seed)
{
    Recorder rec("lattice");
    std::mt19937_64 rng(seed);
    const auto &roots = all_roots();

    rec.check("72 roots of norm 2", roots.size() == 72 && std::all_of(roots.begin(), roots.end(), [](const auto &r) {
                                        return inner(r, r) == 2;
                                    }),
              std::to_string(roots.size()) + " roots");
    rec.check("box scan agrees with reflection closure", roots_by_reflection_closure() == roots);

    const auto minors = gram_leading_minors();
    rec.check("Gram matrix positive definite",
              std::all_of(minors.begin(), minors.end(), [](long long m) { return m > 0; }));

    {
        bool ok = true;
        for (const auto &r : roots) {
            if (!root_index(-r))
                ok = false;
            for (int i = 1; i <= 6; ++i)
                if (!root_index(reflect(r, i)))
                    ok = false;
        }
        rec.check("roots closed under negation and simple reflections", ok);
    }

    {
        std::size_t bad = 0;
        for (int t = 0; t < 1000; ++t) {
            const auto u = random_lattice_vector(rng), v = random_lattice_vector(rng), w = random_lattice_vector(rng);
            if (cocycle(u + v, w) != cocycle(u, w) * cocycle(v, w) || cocycle(u, v + w) != cocycle(u, v) * cocycle(u, w))
                ++bad;
        }
        rec.check("cocycle bimultiplicative on 1000 random triples", bad == 0, count_detail(bad, 1000));
    }

    {
        std::size_t comm = 0, anti = 0, equi = 0, diag = 0, anti_total = 0;
        for (const auto &a : roots) {
            if (cocycle(a, a) != ((inner(a, a) / 2) % 2 ? -1 : 1))
                ++diag;
            for (const auto &b : roots) {
                const int expected = inner(a, b) % 2 ? -1 : 1;
                if (cocycle(a, b) * cocycle(b, a) != expected)
                    ++comm;
                if (root_index(a + b)) {
                    ++anti_total;
                    if (cocycle(a, b) != -cocycle(b, a))
                        ++anti;
                }
                if (cocycle(sigma(a), sigma(b)) != cocycle(a, b))
                    ++equi;
            }
        }
        rec.check("F(a,b)F(b,a) = (-1)^(a,b) on all root pairs", comm == 0 && diag == 0,
                  count_detail(comm + diag, 72 * 72 + 72));
        rec.check("F(a,b) = -F(b,a) when a+b is a root", anti == 0, count_detail(anti, anti_total));
        rec.check("F(sigma a, sigma b) = F(a,b) on all root pairs", equi == 0, count_detail(equi, 72 * 72));
    }

    {
        std::size_t bad = 0;
        for (int t = 0; t < 1000; ++t) {
            const auto u = random_lattice_vector(rng), v = random_lattice_vector(rng);
            if (inner(sigma(u), sigma(v)) != inner(u, v) || sigma(sigma(u)) != u)
                ++bad;
        }
        rec.check("sigma is an isometric involution", bad == 0, count_detail(bad, 1000));
    }

    rec.check("cocycle values on simple roots",
              cocycle(LatticeVector::simple(1), LatticeVector::simple(1)) == -1 &&
                  cocycle(LatticeVector::simple(1), LatticeVector::simple(3)) == -1 &&
                  cocycle(LatticeVector::simple(3), LatticeVector::simple(1)) == 1);
    return rec.take();
}

// ---------------------------------------------------------------------------

SuiteResult algebra_suite(std::uint64_t seed)
{
    Recorder rec("algebra");
    std::mt19937_64 rng(seed);

    {
        const auto bad = jacobi_violations();
        rec.check("Jacobi identity on all 78^3 basis triples", bad == 0, count_detail(bad, 78ull * 78 * 78));
    }
    {
        const auto plus = sigma_fixed_dimension(), minus = sigma_anti_fixed_dimension();
        rec.check("fixed subalgebra has dimension 52", plus == 52, std::to_string(plus));
        rec.check("(-1)-eigenspace has dimension 26", minus == 26, std::to_string(minus));
    }
    {
        const auto &labels = all_operator_labels();
        Matrix m(labels.size(), kE6Dim);
        bool fixed = true;
        for (std::size_t r = 0; r < labels.size(); ++r) {
            const AlgebraElement g = operator_element(labels[r]);
            fixed = fixed && is_sigma_fixed(g);
            const auto c = g.coordinates();
            for (std::size_t j = 0; j < kE6Dim; ++j)
                m(r, j) = c[j];
        }
        const auto rk = rank(m);
        rec.check("48 root vectors and 4 Cartan elements are fixed and independent", fixed && rk == 52,
                  "rank " + std::to_string(rk));
    }
    {
        bool ok = true;
        for (int i = 1; i <= kVDim; ++i)
            ok = ok && hat_sigma(v_basis(i)) == -v_basis(i);
        rec.check("hat_sigma(x_i) = -x_i for i = 1..26", ok);
    }
    {
        std::size_t bad = 0, total = 0;
        for (int i = 1; i <= 4; ++i) {
            const AlgebraElement h = f4_cartan(i);
            for (const auto &label : f4_root_labels()) {
                ++total;
                const AlgebraElement e = f4_root_vector(label);
                if (!(bracket(h, e) == Rational(f4_pairing(f4_cartan_vector(i), label)) * e))
                    ++bad;
            }
        }
        rec.check("Cartan elements act on root vectors by the induced pairing", bad == 0, count_detail(bad, total));
    }
    {
        const auto cls = classify_positive_roots();
        rec.check("12 sigma-invariant positive roots and 12 orbit pairs",
                  cls.invariant.size() == 12 && cls.representatives.size() == 12,
                  std::to_string(cls.invariant.size()) + " + " + std::to_string(cls.representatives.size()));
    }
    {
        std::size_t bad = 0;
        for (int t = 0; t < 200; ++t) {
            const auto u = random_element(rng), v = random_element(rng);
            if (!(hat_sigma(bracket(u, v)) == bracket(hat_sigma(u), hat_sigma(v))) || !bracket(u, u).is_zero() ||
                !(hat_sigma(hat_sigma(u)) == u))
                ++bad;
        }
        rec.check("hat_sigma is an involutive automorphism on random pairs", bad == 0, count_detail(bad, 200));
    }
    {
        std::size_t bad = 0;
        for (int t = 0; t < 50; ++t) {
            const auto g1 = random_fixed_element(rng), g2 = random_fixed_element(rng);
            const Matrix a = ad_on_V(g1), b = ad_on_V(g2);
            if (!(ad_on_V(bracket(g1, g2)) == a * b - b * a))
                ++bad;
        }
        rec.check("ad_on_V is a Lie homomorphism on random pairs", bad == 0, count_detail(bad, 50));
    }
    return rec.take();
}

// ---------------------------------------------------------------------------

SuiteResult representation_suite(std::uint64_t seed)
{
    Recorder rec("rep");
    std::mt19937_64 rng(seed);
    const auto &labels = all_operator_labels();

    {
        const auto errata = validate_table();
        std::set<OperatorLabel> touched;
        bool sign_only = true;
        std::ostringstream os;
        for (const auto &e : errata) {
            touched.insert(e.label);
            sign_only = sign_only && e.transcribed == -e.oracle && e.oracle != 0;
        }
        os << labels.size() << " operators compared, " << labels.size() - touched.size() << " exact, "
           << errata.size() << " sign errata in " << touched.size() << " operators";
        for (const auto &e : errata)
            os << "; " << e.label.to_string() << " x" << e.row << "d" << e.col << " typeset "
               << to_string(e.transcribed) << " derived " << to_string(e.oracle);
        rec.check("transcribed operators agree with the derived action up to listed errata",
                  labels.size() == 52 && sign_only, os.str());
    }
    {
        bool ok = true;
        for (int i = 1; i <= 4; ++i)
            for (bool typeset : {true, false}) {
                auto get = [&](const OperatorLabel &l) {
                    return typeset ? transcribed_operator(l) : oracle_operator(l);
                };
                const Derivation c = commutator(get(OperatorLabel::simple(i, 1)), get(OperatorLabel::simple(i, -1)));
                ok = ok && c == -get(OperatorLabel::cartan(i));
            }
        rec.check("[E_i, E_-i] = -h_i for the simple roots", ok);
    }
    {
        bool ok = true;
        for (const auto &c : f4_positive_root_coeffs())
            ok = ok && tau_op(oracle_operator(OperatorLabel::positive(c))) == oracle_operator(OperatorLabel::negative(c));
        rec.check("negative root operators are tau-images of positive ones", ok);
    }
    {
        std::size_t bad = 0;
        for (const auto &a : labels)
            for (const auto &b : labels) {
                const Derivation lhs = commutator(oracle_operator(a), oracle_operator(b));
                const Derivation rhs = derivation_from_matrix(ad_on_V(bracket(operator_element(a), operator_element(b))));
                if (!(lhs == rhs))
                    ++bad;
            }
        rec.check("operator commutators match brackets for all 52^2 pairs", bad == 0,
                  count_detail(bad, labels.size() * labels.size()));
    }
    {
        bool degree = true, diagonal = true;
        for (const auto &l : labels) {
            const Matrix m = matrix_of(oracle_operator(l));
            (void)m; // matrix_of throws on non-linear coefficients
            for (const auto &[v, c] : oracle_operator(l).terms())
                degree = degree && c.degree() == 1;
            if (l.is_cartan)
                for (const auto &[v, c] : oracle_operator(l).terms())
                    diagonal = diagonal && c == Polynomial::variable(v, c.coefficient(Monomial::variable(v)));
        }
        rec.check("operators preserve degree and Cartan operators are diagonal", degree && diagonal);
    }
    {
        std::size_t bad = 0;
        for (int t = 0; t < 100; ++t) {
            const Derivation d = random_derivation(rng);
            const Polynomial f = random_polynomial(rng, 3, 4), g = random_polynomial(rng, 3, 4);
            if (!(d.apply(f * g) == d.apply(f) * g + f * d.apply(g)))
                ++bad;
        }
        rec.check("Leibniz rule on random samples", bad == 0, count_detail(bad, 100));
    }
    {
        std::size_t bad = 0;
        for (int t = 0; t < 50; ++t) {
            const Derivation a = random_derivation(rng), b = random_derivation(rng), c = random_derivation(rng);
            const Derivation j = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                                 commutator(c, commutator(a, b));
            if (!j.is_zero())
                ++bad;
        }
        rec.check("Jacobi identity for derivation commutators on random triples", bad == 0, count_detail(bad, 50));
    }
    {
        const auto &w = variable_weights();
        rec.check("x1 has weight (0,0,0,1) and x1 x26 weight 0",
                  w[0] == WeightVector{0, 0, 0, 1} &&
                      weight(Polynomial::variable(1) * Polynomial::variable(26)) == WeightVector{0, 0, 0, 0});
    }
    return rec.take();
}

// ---------------------------------------------------------------------------

SuiteResult invariants_suite(std::uint64_t seed)
{
    Recorder rec("invariants");
    std::mt19937_64 rng(seed);
    (void)rng;

    auto inv_detail = [](const std::vector<OperatorLabel> &bad) {
        std::string s = std::to_string(bad.size()) + " of 52 operators do not annihilate";
        for (std::size_t i = 0; i < bad.size() && i < 5; ++i)
            s += (i ? ", " : ": ") + bad[i].to_string();
        return s;
    };

    const Polynomial e1 = eta1();
    const Polynomial e2 = eta2();
    {
        const auto bad = non_annihilating_operators(e1);
        rec.check("eta1 is invariant", bad.empty(), inv_detail(bad));
    }
    {
        const auto bad = non_annihilating_operators(e2);
        rec.check("eta2 from the zeta pairing is invariant", bad.empty() && e2.degree() == 3, inv_detail(bad));
    }
    {
        const Polynomial diff = e2 - eta2_printed();
        const Polynomial lit = eta2_tau_literal() - eta2_printed();
        rec.check("typeset cubic expansion compared with eta2 (difference logged)", true,
                  std::to_string(diff.size()) + " terms differ from the invariant; " + std::to_string(lit.size()) +
                      " terms differ from the unsigned-tau assembly: " + lit.to_string());
    }
    {
        std::string detail;
        bool ok = true;
        for (const auto &s : zeta_recursion())
            if (!(zeta(s.index) == zeta_printed(s.index))) {
                ok = false;
                detail += " zeta_" + std::to_string(s.index);
            }
        rec.check("lowering recursions reproduce the typeset zeta_2..zeta_14", ok, detail);
    }
    {
        bool ok = true;
        for (int i = 1; i <= 4; ++i)
            for (const Polynomial &f : {Polynomial::variable(1), zeta(1), theta()})
                ok = ok && oracle_operator(OperatorLabel::simple(i, 1)).apply(f).is_zero();
        rec.check("x1, zeta1 and theta are singular", ok);
    }
    {
        const int bad = zeta_equivariance_failures(zeta_family());
        const int literal = zeta_equivariance_failures(zeta_family_tau_literal());
        rec.check("zeta module is equivariant for all eight simple operators", bad == 0,
                  count_detail(static_cast<std::size_t>(bad), 8 * 26) + "; zeta_r = tau(zeta_{27-r}) without sign gives " +
                      std::to_string(literal) + " failures");
    }
    {
        bool ok = true;
        for (int r = 15; r <= 26; ++r)
            ok = ok && zeta(r) == -tau(zeta(27 - r));
        ok = ok && tau(zeta(13)) == zeta(13) && tau(zeta(14)) == zeta(14);
        rec.check("zeta_r = -tau(zeta_{27-r}) for r = 15..26", ok);
    }
    rec.check("theta matches its typeset expansion and has weight (0,0,1,0)",
              theta() == theta_printed() && weight(theta()) == WeightVector{0, 0, 1, 0});
    rec.check("eta1 and eta2 have weight 0",
              weight(e1) == WeightVector{0, 0, 0, 0} && weight(e2) == WeightVector{0, 0, 0, 0});
    for (const auto &id : verify_elimination_identities()) {
        std::string detail = id.holds ? "holds as typeset" : "typeset form off by " + id.difference.to_string();
        if (!id.holds && id.corrected_holds)
            detail += *id.corrected_holds ? "; holds after correction: " + id.correction
                                          : "; correction fails: " + id.correction;
        rec.check("elimination identity " + id.name, id.holds || id.corrected_holds.value_or(false), detail);
    }
    {
        std::size_t bad = 0, total = 0;
        for (int k = 0; k <= 5; ++k)
            for (const auto &m : singular_exponents(k)) {
                ++total;
                const Polynomial f = singular_product(m);
                for (int i = 1; i <= 4; ++i)
                    if (!oracle_operator(OperatorLabel::simple(i, 1)).apply(f).is_zero()) {
                        ++bad;
                        break;
                    }
            }
        rec.check("products x1^a zeta1^b theta^c eta1^d eta2^e of degree <= 5 are singular", bad == 0,
                  count_detail(bad, total));
    }
    {
        const auto bad = laplacian_commutation_failures(laplacian(), 3);
        const auto typeset_bad = laplacian_commutation_failures(printed_laplacian(), 3);
        rec.check("Laplacian commutes with all 52 operators on degree 3", bad.empty(),
                  std::to_string(bad.size()) + " failing; the typeset Cartan block -d13^2 - d13d14 - d14^2 fails for " +
                      std::to_string(typeset_bad.size()));
    }
    {
        bool ok = true;
        std::string detail;
        for (int k = 2; k <= 5; ++k) {
            const auto hb = harmonic_summand_bound(k);
            ok = ok && hb.verified() >= hb.bound && hb.verified() == static_cast<int>(hb.witnesses.size());
            detail += "k=" + std::to_string(k) + ": " + std::to_string(hb.verified()) + "/" + std::to_string(hb.bound) + " ";
        }
        rec.check("harmonic witnesses meet the summand bound for k = 2..5", ok, detail);
    }
    return rec.take();
}

// ---------------------------------------------------------------------------

SuiteResult identity_suite(std::uint64_t seed)
{
    Recorder rec("identity");
    (void)seed;
    const auto &m = F4MetricData::get();
    {
        std::size_t lng = 0, shrt = 0;
        for (const auto &r : m.positive_roots) {
            F4Vector v;
            for (int i = 0; i < 4; ++i)
                v[i] = r[i];
            const Rational n = m.inner(v, v);
            lng += n == 2;
            shrt += n == 1;
        }
        rec.check("24 positive roots, 12 long and 12 short", m.positive_roots.size() == 24 && lng == 12 && shrt == 12);
    }
    rec.check("d(0,0) = 1, d(0,1) = 26, d(1,0) = 273",
              weyl_dim(0, 0) == 1 && weyl_dim(0, 1) == 26 && weyl_dim(1, 0) == 273);
    {
        std::size_t bad = 0;
        for (unsigned long k = 0; k <= 5; ++k)
            for (unsigned long l = 0; l <= 5; ++l)
                if (weyl_dim(k, l) != closed_form_dim(k, l))
                    ++bad;
        rec.check("Weyl product equals the closed form for 0 <= k,l <= 5", bad == 0, count_detail(bad, 36));
    }
    {
        const Rational p = printed_closed_form_dim(0, 0);
        rec.check("typeset constant 39504568320000 gives a non-integer at k = l = 0", p.get_den() != 1,
                  "d(0,0) = " + to_string(p));
    }
    {
        const auto r = verify_identity_24(30);
        rec.check("(1-t)^24 series = 1 + 2t + 2t^2 + t^3 through t^30", r.pass,
                  r.first_mismatch ? "first mismatch at " + std::to_string(*r.first_mismatch) : "");
        const auto r26 = verify_identity_26(30);
        rec.check("1/(1-t)^26 and 1/(1-t)^24 forms agree through t^30", r26.pass() && r26.consistent());
    }
    {
        std::size_t bad = 0;
        for (unsigned long k = 0; k <= 8; ++k)
            if (branching_sum(k) != binomial(k + 25, 25))
                ++bad;
        rec.check("branching sums equal C(k+25,25) for k = 0..8", bad == 0, count_detail(bad, 9));
    }
    return rec.take();
}

} // namespace f4rep

#include "f4rep/representation.hpp"

namespace f4rep
{

namespace
{

SecondOrderOperator dual_pairing_operator(const Rational &c13, const Rational &c1314, const Rational &c14)
{
    SecondOrderOperator d;
    for (int r = 1; r <= 12; ++r)
        d.add_term(3, r, 27 - r);
    d.add_term(c13, 13, 13);
    d.add_term(c1314, 13, 14);
    d.add_term(c14, 14, 14);
    return d;
}

} // namespace

const SecondOrderOperator &laplacian()
{
    // Dual of the form eta1: the Cartan block of eta1 is inverted, not copied.
    static const SecondOrderOperator d = dual_pairing_operator(-3, 3, -3);
    return d;
}

const SecondOrderOperator &printed_laplacian()
{
    static const SecondOrderOperator d = dual_pairing_operator(-1, -1, -1);
    return d;
}

Polynomial apply_laplacian(const Polynomial &f) { return laplacian().apply(f); }

std::vector<OperatorLabel> laplacian_commutation_failures(const SecondOrderOperator &delta, int k)
{
    std::vector<OperatorLabel> out;
    const auto monomials = monomials_of_degree(k);
    for (const auto &label : all_operator_labels()) {
        const Derivation &d = oracle_operator(label);
        for (const auto &m : monomials) {
            const Polynomial f = Polynomial::monomial(m);
            if (!(delta.apply(d.apply(f)) == d.apply(delta.apply(f)))) {
                out.push_back(label);
                break;
            }
        }
    }
    return out;
}

int HarmonicBound::verified() const
{
    int n = 0;
    for (const auto &w : witnesses)
        n += w.harmonic ? 1 : 0;
    return n;
}

HarmonicBound harmonic_summand_bound(int k)
{
    if (k < 2)
        throw std::invalid_argument("harmonic bound needs degree >= 2");
    HarmonicBound out;
    out.degree = k;
    out.bound = k / 3 + (k - 2) / 3 + 2;
    const Polynomial x1 = Polynomial::variable(1);
    const Polynomial th = theta();
    const Polynomial &z1 = zeta(1);
    for (int k2 = 0; 3 * k2 <= k; ++k2) {
        const int k1 = k - 3 * k2;
        HarmonicWitness w;
        w.name = "x1^" + std::to_string(k1) + " theta^" + std::to_string(k2);
        w.value = x1.pow(static_cast<unsigned>(k1)) * th.pow(static_cast<unsigned>(k2));
        w.harmonic = apply_laplacian(w.value).is_zero();
        out.witnesses.push_back(std::move(w));
    }
    for (int m2 = 0; 3 * m2 + 2 <= k; ++m2) {
        const int m1 = k - 2 - 3 * m2;
        HarmonicWitness w;
        w.name = "x1^" + std::to_string(m1) + " zeta1 theta^" + std::to_string(m2);
        w.value = x1.pow(static_cast<unsigned>(m1)) * z1 * th.pow(static_cast<unsigned>(m2));
        w.harmonic = apply_laplacian(w.value).is_zero();
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

} // namespace f4rep

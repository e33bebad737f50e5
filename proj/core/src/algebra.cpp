#include "f4rep/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace f4rep
{

namespace
{

using Terms = std::vector<std::pair<std::size_t, int>>;

LatticeVector lv(int k1, int k2, int k3, int k4, int k5, int k6)
{
    return LatticeVector{{k1, k2, k3, k4, k5, k6}};
}

std::size_t root_label(const LatticeVector &alpha)
{
    auto idx = root_index(alpha);
    if (!idx)
        throw std::invalid_argument("not an E6 root: " + alpha.to_string());
    return kE6Rank + *idx;
}

Terms compute_basis_bracket(std::size_t a, std::size_t b)
{
    const auto &roots = all_roots();
    Terms out;
    if (a < kE6Rank && b < kE6Rank)
        return out;
    if (a < kE6Rank) {
        const LatticeVector &beta = roots[b - kE6Rank];
        int c = inner(LatticeVector::simple(static_cast<int>(a) + 1), beta);
        if (c != 0)
            out.emplace_back(b, c);
        return out;
    }
    if (b < kE6Rank) {
        const LatticeVector &alpha = roots[a - kE6Rank];
        int c = inner(LatticeVector::simple(static_cast<int>(b) + 1), alpha);
        if (c != 0)
            out.emplace_back(a, -c);
        return out;
    }
    const LatticeVector &alpha = roots[a - kE6Rank];
    const LatticeVector &beta = roots[b - kE6Rank];
    const LatticeVector sum = alpha + beta;
    if (sum.is_zero()) {
        // [E_a, E_-a] = -a
        for (int i = 0; i < kE6Rank; ++i)
            if (alpha.coords[i] != 0)
                out.emplace_back(static_cast<std::size_t>(i), -alpha.coords[i]);
        return out;
    }
    if (auto idx = root_index(sum))
        out.emplace_back(kE6Rank + *idx, cocycle(alpha, beta));
    return out;
}

struct BracketTable
{
    std::vector<Terms> entries;
    BracketTable() : entries(kE6Dim * kE6Dim)
    {
        for (std::size_t a = 0; a < kE6Dim; ++a)
            for (std::size_t b = 0; b < kE6Dim; ++b)
                entries[a * kE6Dim + b] = compute_basis_bracket(a, b);
    }
};

const BracketTable &bracket_table()
{
    static const BracketTable table;
    return table;
}

struct F4RootEntry
{
    std::array<int, 4> coeffs;
    std::vector<LatticeVector> e6_roots;
};

// Positive root vectors of the folded algebra as sums of E6 root vectors.
const std::vector<F4RootEntry> &f4_root_table()
{
    static const std::vector<F4RootEntry> table = {
        {{1, 0, 0, 0}, {lv(0, 1, 0, 0, 0, 0)}},
        {{0, 1, 0, 0}, {lv(0, 0, 0, 1, 0, 0)}},
        {{0, 0, 1, 0}, {lv(0, 0, 1, 0, 0, 0), lv(0, 0, 0, 0, 1, 0)}},
        {{0, 0, 0, 1}, {lv(1, 0, 0, 0, 0, 0), lv(0, 0, 0, 0, 0, 1)}},
        {{1, 1, 0, 0}, {lv(0, 1, 0, 1, 0, 0)}},
        {{0, 1, 1, 0}, {lv(0, 0, 1, 1, 0, 0), lv(0, 0, 0, 1, 1, 0)}},
        {{0, 0, 1, 1}, {lv(1, 0, 1, 0, 0, 0), lv(0, 0, 0, 0, 1, 1)}},
        {{1, 1, 1, 0}, {lv(0, 1, 1, 1, 0, 0), lv(0, 1, 0, 1, 1, 0)}},
        {{0, 1, 1, 1}, {lv(1, 0, 1, 1, 0, 0), lv(0, 0, 0, 1, 1, 1)}},
        {{0, 1, 2, 0}, {lv(0, 0, 1, 1, 1, 0)}},
        {{1, 1, 2, 0}, {lv(0, 1, 1, 1, 1, 0)}},
        {{0, 1, 2, 1}, {lv(1, 0, 1, 1, 1, 0), lv(0, 0, 1, 1, 1, 1)}},
        {{1, 1, 1, 1}, {lv(1, 1, 1, 1, 0, 0), lv(0, 1, 0, 1, 1, 1)}},
        {{1, 2, 2, 0}, {lv(0, 1, 1, 2, 1, 0)}},
        {{1, 1, 2, 1}, {lv(1, 1, 1, 1, 1, 0), lv(0, 1, 1, 1, 1, 1)}},
        {{0, 1, 2, 2}, {lv(1, 0, 1, 1, 1, 1)}},
        {{1, 2, 2, 1}, {lv(1, 1, 1, 2, 1, 0), lv(0, 1, 1, 2, 1, 1)}},
        {{1, 1, 2, 2}, {lv(1, 1, 1, 1, 1, 1)}},
        {{1, 2, 2, 2}, {lv(1, 1, 1, 2, 1, 1)}},
        {{1, 2, 3, 1}, {lv(1, 1, 2, 2, 1, 0), lv(0, 1, 1, 2, 2, 1)}},
        {{1, 2, 3, 2}, {lv(1, 1, 2, 2, 1, 1), lv(1, 1, 1, 2, 2, 1)}},
        {{1, 2, 4, 2}, {lv(1, 1, 2, 2, 2, 1)}},
        {{1, 3, 4, 2}, {lv(1, 1, 2, 3, 2, 1)}},
        {{2, 3, 4, 2}, {lv(1, 2, 2, 3, 2, 1)}},
    };
    return table;
}

// x_r for r = 1..12 is E_{first} - E_{second}; x_{27-r} uses the negated roots.
const std::array<std::pair<LatticeVector, LatticeVector>, 12> &v_root_pairs()
{
    static const std::array<std::pair<LatticeVector, LatticeVector>, 12> pairs = {{
        {lv(1, 1, 2, 2, 1, 1), lv(1, 1, 1, 2, 2, 1)},
        {lv(1, 1, 2, 2, 1, 0), lv(0, 1, 1, 2, 2, 1)},
        {lv(1, 1, 1, 2, 1, 0), lv(0, 1, 1, 2, 1, 1)},
        {lv(1, 1, 1, 1, 1, 0), lv(0, 1, 1, 1, 1, 1)},
        {lv(1, 1, 1, 1, 0, 0), lv(0, 1, 0, 1, 1, 1)},
        {lv(1, 0, 1, 1, 1, 0), lv(0, 0, 1, 1, 1, 1)},
        {lv(0, 1, 1, 1, 0, 0), lv(0, 1, 0, 1, 1, 0)},
        {lv(1, 0, 1, 1, 0, 0), lv(0, 0, 0, 1, 1, 1)},
        {lv(0, 0, 1, 1, 0, 0), lv(0, 0, 0, 1, 1, 0)},
        {lv(1, 0, 1, 0, 0, 0), lv(0, 0, 0, 0, 1, 1)},
        {lv(0, 0, 1, 0, 0, 0), lv(0, 0, 0, 0, 1, 0)},
        {lv(1, 0, 0, 0, 0, 0), lv(0, 0, 0, 0, 0, 1)},
    }};
    return pairs;
}

std::vector<AlgebraElement> make_v_basis()
{
    std::vector<AlgebraElement> x(kVDim + 1);
    const auto &pairs = v_root_pairs();
    for (int r = 1; r <= 12; ++r) {
        const auto &[a, b] = pairs[r - 1];
        x[r] = AlgebraElement::root_vector(a) - AlgebraElement::root_vector(b);
        x[27 - r] = AlgebraElement::root_vector(-a) - AlgebraElement::root_vector(-b);
    }
    x[13] = AlgebraElement::cartan(lv(1, 0, 0, 0, 0, -1));
    x[14] = AlgebraElement::cartan(lv(0, 0, 1, 0, -1, 0));
    return x;
}

} // namespace

// ---------------------------------------------------------------------------
// BasisLabel

BasisLabel BasisLabel::cartan(int i)
{
    if (i < 1 || i > kE6Rank)
        throw std::out_of_range("Cartan coordinate must be in 1..6");
    return BasisLabel(static_cast<std::size_t>(i - 1));
}

BasisLabel BasisLabel::root(const LatticeVector &alpha) { return BasisLabel(root_label(alpha)); }

BasisLabel BasisLabel::from_index(std::size_t index)
{
    if (index >= kE6Dim)
        throw std::out_of_range("basis label index out of range");
    return BasisLabel(index);
}

int BasisLabel::cartan_index() const
{
    if (!is_cartan())
        throw std::logic_error("label is a root vector");
    return static_cast<int>(index_) + 1;
}

const LatticeVector &BasisLabel::root() const
{
    if (is_cartan())
        throw std::logic_error("label is a Cartan coordinate");
    return all_roots()[index_ - kE6Rank];
}

std::string BasisLabel::to_string() const
{
    if (is_cartan())
        return "a" + std::to_string(cartan_index());
    return "E" + root().to_string();
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::basis(const BasisLabel &label, const Rational &c)
{
    AlgebraElement u;
    u.add_term(label.index(), c);
    return u;
}

AlgebraElement AlgebraElement::root_vector(const LatticeVector &alpha, const Rational &c)
{
    return basis(BasisLabel::root(alpha), c);
}

AlgebraElement AlgebraElement::cartan(const LatticeVector &h)
{
    AlgebraElement u;
    for (int i = 0; i < kE6Rank; ++i)
        u.add_term(static_cast<std::size_t>(i), h.coords[i]);
    return u;
}

Rational AlgebraElement::coefficient(const BasisLabel &label) const
{
    auto it = terms_.find(label.index());
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> AlgebraElement::coordinates() const
{
    std::vector<Rational> v(kE6Dim);
    for (const auto &[k, c] : terms_)
        v[k] = c;
    return v;
}

void AlgebraElement::add_term(std::size_t label, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o)
{
    for (const auto &[k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o)
{
    for (const auto &[k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, c] : terms_)
        c *= s;
    return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement &o) const
{
    AlgebraElement r(*this);
    return r += o;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement &o) const
{
    AlgebraElement r(*this);
    return r -= o;
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement r(*this);
    return r *= -1;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto &[k, c] : terms_) {
        if (!s.empty())
            s += c < 0 ? " - " : " + ";
        else if (c < 0)
            s += "-";
        Rational a = abs(c);
        if (a != 1)
            s += f4rep::to_string(a) + "*";
        s += BasisLabel::from_index(k).to_string();
    }
    return s;
}

// ---------------------------------------------------------------------------
// Bracket and involution

const std::vector<std::pair<std::size_t, int>> &basis_bracket(std::size_t a, std::size_t b)
{
    if (a >= kE6Dim || b >= kE6Dim)
        throw std::out_of_range("basis label index out of range");
    return bracket_table().entries[a * kE6Dim + b];
}

AlgebraElement bracket(const AlgebraElement &u, const AlgebraElement &v)
{
    AlgebraElement out;
    const auto &table = bracket_table();
    for (const auto &[a, ca] : u.terms())
        for (const auto &[b, cb] : v.terms()) {
            const auto &terms = table.entries[a * kE6Dim + b];
            if (terms.empty())
                continue;
            Rational ab = ca * cb;
            for (const auto &[k, c] : terms)
                out.add_term(k, ab * c);
        }
    return out;
}

AlgebraElement hat_sigma(const AlgebraElement &u)
{
    AlgebraElement out;
    for (const auto &[k, c] : u.terms()) {
        if (k < kE6Rank) {
            // sigma permutes the simple roots, so it permutes Cartan coordinates.
            LatticeVector e;
            e.coords[k] = 1;
            const LatticeVector s = sigma(e);
            for (int i = 0; i < kE6Rank; ++i)
                if (s.coords[i])
                    out.add_term(static_cast<std::size_t>(i), c);
        } else {
            out.add_term(root_label(sigma(all_roots()[k - kE6Rank])), c);
        }
    }
    return out;
}

bool is_sigma_fixed(const AlgebraElement &u) { return hat_sigma(u) == u; }

Matrix hat_sigma_matrix()
{
    Matrix m(kE6Dim, kE6Dim);
    for (std::size_t j = 0; j < kE6Dim; ++j) {
        const AlgebraElement img = hat_sigma(AlgebraElement::basis(BasisLabel::from_index(j)));
        for (const auto &[i, c] : img.terms())
            m(i, j) = c;
    }
    return m;
}

std::size_t sigma_fixed_dimension()
{
    return kE6Dim - rank(hat_sigma_matrix() - Matrix::identity(kE6Dim));
}

std::size_t sigma_anti_fixed_dimension()
{
    return kE6Dim - rank(hat_sigma_matrix() + Matrix::identity(kE6Dim));
}

std::uint64_t jacobi_violations()
{
    const auto &table = bracket_table();
    std::uint64_t bad = 0;
    std::array<long long, kE6Dim> acc{};
    auto accumulate = [&](std::size_t x, std::size_t y, std::size_t z) {
        // acc += [x, [y, z]]
        for (const auto &[k, c] : table.entries[y * kE6Dim + z])
            for (const auto &[m, d] : table.entries[x * kE6Dim + k])
                acc[m] += static_cast<long long>(c) * d;
    };
    for (std::size_t a = 0; a < kE6Dim; ++a)
        for (std::size_t b = 0; b < kE6Dim; ++b)
            for (std::size_t c = 0; c < kE6Dim; ++c) {
                acc.fill(0);
                accumulate(a, b, c);
                accumulate(b, c, a);
                accumulate(c, a, b);
                if (std::any_of(acc.begin(), acc.end(), [](long long v) { return v != 0; }))
                    ++bad;
            }
    return bad;
}

// ---------------------------------------------------------------------------
// Folding

std::string F4RootLabel::to_string() const
{
    std::string s = sign > 0 ? "E+(" : "E-(";
    for (int i = 0; i < 4; ++i) {
        if (i)
            s += ",";
        s += std::to_string(coeffs[i]);
    }
    return s + ")";
}

const std::vector<std::array<int, 4>> &f4_positive_root_coeffs()
{
    static const std::vector<std::array<int, 4>> coeffs = [] {
        std::vector<std::array<int, 4>> v;
        for (const auto &e : f4_root_table())
            v.push_back(e.coeffs);
        return v;
    }();
    return coeffs;
}

std::vector<F4RootLabel> f4_root_labels()
{
    std::vector<F4RootLabel> out;
    for (const auto &c : f4_positive_root_coeffs())
        out.push_back({c, 1});
    for (const auto &c : f4_positive_root_coeffs())
        out.push_back({c, -1});
    return out;
}

std::array<int, 4> fold(const LatticeVector &alpha)
{
    const auto &k = alpha.coords;
    return {k[1], k[3], k[2] + k[4], k[0] + k[5]};
}

AlgebraElement f4_root_vector(const F4RootLabel &label)
{
    if (label.sign != 1 && label.sign != -1)
        throw std::invalid_argument("F4 root label sign must be +1 or -1");
    for (const auto &e : f4_root_table())
        if (e.coeffs == label.coeffs) {
            AlgebraElement u;
            for (const auto &r : e.e6_roots)
                u += AlgebraElement::root_vector(r * label.sign);
            return u;
        }
    throw std::invalid_argument("unknown F4 root label " + label.to_string());
}

LatticeVector f4_cartan_vector(int i)
{
    switch (i) {
    case 1:
        return lv(0, 1, 0, 0, 0, 0);
    case 2:
        return lv(0, 0, 0, 1, 0, 0);
    case 3:
        return lv(0, 0, 1, 0, 1, 0);
    case 4:
        return lv(1, 0, 0, 0, 0, 1);
    default:
        throw std::out_of_range("F4 Cartan index must be in 1..4");
    }
}

AlgebraElement f4_cartan(int i) { return AlgebraElement::cartan(f4_cartan_vector(i)); }

int f4_pairing(const LatticeVector &h, const F4RootLabel &label)
{
    for (const auto &e : f4_root_table())
        if (e.coeffs == label.coeffs)
            return inner(h, e.e6_roots.front() * label.sign);
    throw std::invalid_argument("unknown F4 root label " + label.to_string());
}

const AlgebraElement &v_basis(int i)
{
    static const std::vector<AlgebraElement> x = make_v_basis();
    if (i < 1 || i > kVDim)
        throw std::out_of_range("V basis index must be in 1..26");
    return x[i];
}

std::vector<Rational> v_coordinates(const AlgebraElement &u)
{
    std::vector<Rational> coords(kVDim);
    const auto &pairs = v_root_pairs();
    for (int r = 1; r <= 12; ++r) {
        coords[r - 1] = u.coefficient(BasisLabel::root(pairs[r - 1].first));
        coords[26 - r] = u.coefficient(BasisLabel::root(-pairs[r - 1].first));
    }
    // Cartan part a*(a1 - a6) + b*(a3 - a5).
    coords[12] = u.coefficient(BasisLabel::cartan(1));
    coords[13] = u.coefficient(BasisLabel::cartan(3));

    AlgebraElement recon;
    for (int r = 1; r <= kVDim; ++r)
        if (coords[r - 1] != 0)
            recon += coords[r - 1] * v_basis(r);
    if (!(recon == u))
        throw std::domain_error("element is not in V: " + u.to_string());
    return coords;
}

Matrix ad_on_V(const AlgebraElement &g)
{
    if (!is_sigma_fixed(g))
        throw std::invalid_argument("ad_on_V requires a hat_sigma-fixed element");
    Matrix m(kVDim, kVDim);
    for (int j = 1; j <= kVDim; ++j) {
        const auto col = v_coordinates(bracket(g, v_basis(j)));
        for (int i = 0; i < kVDim; ++i)
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j - 1)) = col[i];
    }
    return m;
}

SigmaClassification classify_positive_roots()
{
    SigmaClassification out;
    for (const auto &r : positive_roots()) {
        const LatticeVector s = sigma(r);
        if (s == r)
            out.invariant.push_back(r);
        else if (r < s)
            out.representatives.push_back(r);
    }
    return out;
}

} // namespace f4rep

#ifndef F4REP_ALGEBRA_HPP
#define F4REP_ALGEBRA_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "f4rep/linalg.hpp"
#include "f4rep/rational.hpp"
#include "f4rep/root_lattice.hpp"

namespace f4rep
{

inline constexpr std::size_t kE6Dim = 78;
inline constexpr int kVDim = 26;

/// Basis label of the E6 algebra: either a Cartan coordinate alpha_i
/// (i = 1..6) or a root vector E_alpha.
///
/// Labels are dense indices: 0..5 are the Cartan coordinates and
/// 6 + root_index(alpha) the root vectors.
class BasisLabel
{
public:
    static BasisLabel cartan(int i);
    static BasisLabel root(const LatticeVector &alpha);
    static BasisLabel from_index(std::size_t index);

    bool is_cartan() const { return index_ < kE6Rank; }
    int cartan_index() const; // 1..6
    const LatticeVector &root() const;
    std::size_t index() const { return index_; }

    std::string to_string() const;

    auto operator<=>(const BasisLabel &) const = default;

private:
    explicit BasisLabel(std::size_t index) : index_(index) {}
    std::size_t index_;
};

/// Element of the E6 algebra; sparse with exact rational coefficients.
class AlgebraElement
{
public:
    using TermMap = std::map<std::size_t, Rational>;

    AlgebraElement() = default;

    static AlgebraElement basis(const BasisLabel &label, const Rational &c = 1);
    static AlgebraElement root_vector(const LatticeVector &alpha, const Rational &c = 1);
    /// The Cartan element sum_i h_i alpha_i.
    static AlgebraElement cartan(const LatticeVector &h);

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const BasisLabel &label) const;

    /// Dense coordinates in the 78 labels.
    std::vector<Rational> coordinates() const;

    void add_term(std::size_t label, const Rational &c);

    AlgebraElement &operator+=(const AlgebraElement &o);
    AlgebraElement &operator-=(const AlgebraElement &o);
    AlgebraElement &operator*=(const Rational &s);
    AlgebraElement operator+(const AlgebraElement &o) const;
    AlgebraElement operator-(const AlgebraElement &o) const;
    AlgebraElement operator-() const;
    friend AlgebraElement operator*(const Rational &s, AlgebraElement u) { return u *= s; }

    friend bool operator==(const AlgebraElement &, const AlgebraElement &) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Lie bracket with [h, E_a] = (h, a) E_a, [E_a, E_-a] = -a and
/// [E_a, E_b] = F(a, b) E_{a+b} when a + b is a root.
AlgebraElement bracket(const AlgebraElement &u, const AlgebraElement &v);

/// Bracket of two basis labels as sparse integer terms (label, coefficient).
const std::vector<std::pair<std::size_t, int>> &basis_bracket(std::size_t a, std::size_t b);

/// Automorphism induced by the diagram involution.
AlgebraElement hat_sigma(const AlgebraElement &u);
bool is_sigma_fixed(const AlgebraElement &u);

/// Root label of the folded algebra: coefficients on the four simple roots
/// (two long, two short) and a sign.
struct F4RootLabel
{
    std::array<int, 4> coeffs{};
    int sign = 1;

    F4RootLabel negated() const { return {coeffs, -sign}; }
    std::string to_string() const;

    auto operator<=>(const F4RootLabel &) const = default;
};

/// The 24 positive roots of F4 in the order of the published root-vector
/// list (simple roots first, highest root last).
const std::vector<std::array<int, 4>> &f4_positive_root_coeffs();

/// The 48 root labels: positives in list order, then their negatives.
std::vector<F4RootLabel> f4_root_labels();

/// Projection of an E6 root onto F4 coefficients: (k2, k4, k3 + k5, k1 + k6).
std::array<int, 4> fold(const LatticeVector &alpha);

/// Root vector of the folded algebra, as an explicit sum of one or two E6
/// root vectors. Throws std::invalid_argument for unknown labels.
AlgebraElement f4_root_vector(const F4RootLabel &label);

/// Cartan elements h1 = a2, h2 = a4, h3 = a3 + a5, h4 = a1 + a6.
AlgebraElement f4_cartan(int i);

/// Cartan element of f4_cartan(i) as a lattice vector.
LatticeVector f4_cartan_vector(int i);

/// Basis x_1..x_26 of the (-1)-eigenspace of hat_sigma.
const AlgebraElement &v_basis(int i);

/// Coordinates of u in the basis x_1..x_26 (0-based vector). Throws
/// std::domain_error when u is not in the span.
std::vector<Rational> v_coordinates(const AlgebraElement &u);

/// Matrix of ad(g) on V: bracket(g, x_j) = sum_i M(i-1, j-1) x_i.
/// Throws std::invalid_argument when g is not hat_sigma-fixed.
Matrix ad_on_V(const AlgebraElement &g);

/// Matrix of hat_sigma on the 78-dimensional algebra.
Matrix hat_sigma_matrix();

/// Dimensions of the +1 and -1 eigenspaces of hat_sigma, from ranks of
/// hat_sigma -/+ id.
std::size_t sigma_fixed_dimension();
std::size_t sigma_anti_fixed_dimension();

/// Number of basis triples (a, b, c) with a nonzero Jacobi sum, over all
/// 78^3 ordered triples.
std::uint64_t jacobi_violations();

/// Positive E6 roots split by the diagram involution.
struct SigmaClassification
{
    std::vector<LatticeVector> invariant;       // sigma(a) == a
    std::vector<LatticeVector> representatives; // one per 2-element orbit
};
SigmaClassification classify_positive_roots();

/// Eigenvalue of the Cartan element h on the folded root vector of
/// label, read off from any constituent E6 root.
int f4_pairing(const LatticeVector &h, const F4RootLabel &label);

} // namespace f4rep

#endif

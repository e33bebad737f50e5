#ifndef F4REP_ROOT_LATTICE_HPP
#define F4REP_ROOT_LATTICE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace f4rep
{

inline constexpr int kE6Rank = 6;

/// Element of the E6 root lattice, in the simple-root basis.
///
/// Nodes are labelled 1..6 along the chain 1-3-4-5-6 with node 2 attached
/// to node 4. Coordinates are stored 0-based: coords[i] multiplies
/// alpha_{i+1}.
struct LatticeVector
{
    std::array<int, kE6Rank> coords{};

    /// The simple root alpha_i, 1 <= i <= 6.
    static LatticeVector simple(int i);

    bool is_zero() const;

    LatticeVector operator+(const LatticeVector &o) const;
    LatticeVector operator-(const LatticeVector &o) const;
    LatticeVector operator-() const;
    LatticeVector operator*(int s) const;

    auto operator<=>(const LatticeVector &) const = default;

    std::string to_string() const;
};

using IntMatrix6 = std::array<std::array<int, kE6Rank>, kE6Rank>;

/// Gram matrix of the E6 form in the simple-root basis.
const IntMatrix6 &gram_e6();

/// 0/1 matrix of the mod-2 bilinear form defining the sign cocycle:
/// identity plus the entries (1,3), (4,2), (3,4), (5,4), (6,5).
const IntMatrix6 &cocycle_form();

int inner(const LatticeVector &u, const LatticeVector &v);

bool is_root(const LatticeVector &v);

/// First nonzero coefficient is positive.
bool is_positive(const LatticeVector &v);

/// The 72 roots, sorted lexicographically on coordinates. Found by scanning
/// the coefficient box bounded by the highest root and keeping norm-2 vectors.
const std::vector<LatticeVector> &all_roots();

/// The 36 positive roots, in the order of all_roots().
std::vector<LatticeVector> positive_roots();

/// Position of v in all_roots(), or nullopt if v is not a root.
std::optional<std::size_t> root_index(const LatticeVector &v);

/// Independent enumeration: orbit of the simple roots under the simple
/// reflections, sorted like all_roots().
std::vector<LatticeVector> roots_by_reflection_closure();

/// Simple reflection v - (v, alpha_i) alpha_i.
LatticeVector reflect(const LatticeVector &v, int i);

/// Diagram involution: swaps k1<->k6 and k3<->k5.
LatticeVector sigma(const LatticeVector &v);

/// Sign cocycle F(u, v) = (-1)^(u^T C v) with C = cocycle_form().
int cocycle(const LatticeVector &u, const LatticeVector &v);

/// Leading principal minors of the Gram matrix.
std::array<long long, kE6Rank> gram_leading_minors();

} // namespace f4rep

#endif

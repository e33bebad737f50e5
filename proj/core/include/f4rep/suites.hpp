#ifndef F4REP_SUITES_HPP
#define F4REP_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace f4rep
{

inline constexpr std::uint64_t kDefaultSeed = 20240229;

struct CheckResult
{
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult
{
    std::string name;
    std::vector<CheckResult> checks;
    bool pass() const;
};

/// Roots, cocycle laws and the involution.
SuiteResult lattice_suite(std::uint64_t seed = kDefaultSeed);

/// Jacobi identity, eigenspaces of the involution, folded root vectors and
/// the module V.
SuiteResult algebra_suite(std::uint64_t seed = kDefaultSeed);

/// Transcribed operators against the oracle, commutation relations and
/// derivation algebra laws.
SuiteResult representation_suite(std::uint64_t seed = kDefaultSeed);

/// eta1, eta2, the zeta module, theta, elimination identities and the
/// Laplacian.
SuiteResult invariants_suite(std::uint64_t seed = kDefaultSeed);

/// Dimension formula, series identity and branching sums.
SuiteResult identity_suite(std::uint64_t seed = kDefaultSeed);

} // namespace f4rep

#endif

#ifndef F4REP_REPRESENTATION_HPP
#define F4REP_REPRESENTATION_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "f4rep/algebra.hpp"
#include "f4rep/linalg.hpp"
#include "f4rep/polynomial.hpp"

namespace f4rep
{

/// Names one of the 52 operators: a root vector E(c) / E-(c) or a Cartan
/// element h1..h4.
struct OperatorLabel
{
    bool is_cartan = false;
    F4RootLabel root{};
    int cartan_index = 0;

    static OperatorLabel positive(const std::array<int, 4> &coeffs);
    static OperatorLabel negative(const std::array<int, 4> &coeffs);
    static OperatorLabel from_root(const F4RootLabel &label);
    static OperatorLabel cartan(int i);
    /// Simple raising (sign +1) or lowering (sign -1) operator, i = 1..4.
    static OperatorLabel simple(int i, int sign);

    /// Accepts "E(1,0,0,0)", "E+(1,0,0,0)", "E-(1,0,0,0)" and "h1".."h4".
    /// Throws std::invalid_argument.
    static OperatorLabel parse(const std::string &text);

    /// "E(1,0,0,0)", "E-(1,0,0,0)" or "h3".
    std::string to_string() const;

    auto operator<=>(const OperatorLabel &) const = default;
};

/// 24 positive root operators, their 24 negatives, then h1..h4.
const std::vector<OperatorLabel> &all_operator_labels();

/// The element of the fixed subalgebra named by label.
AlgebraElement operator_element(const OperatorLabel &label);

/// sum_{i,j} M(i,j) x_{i+1} d_{j+1}.
Derivation derivation_from_matrix(const Matrix &m);

/// Inverse of derivation_from_matrix; throws std::invalid_argument when a
/// coefficient is not linear.
Matrix matrix_of(const Derivation &d);

/// Derivation induced by ad_on_V on the generators.
const Derivation &oracle_operator(const OperatorLabel &label);

/// The hand-typeset formula; negatives are tau-images of the positives.
/// Throws std::invalid_argument for unknown labels.
Derivation transcribed_operator(const OperatorLabel &label);

/// Raw formula string of a positive or Cartan operator as typeset.
const std::string &transcribed_formula(const OperatorLabel &label);

struct ErrataRecord
{
    OperatorLabel label;
    int row = 0; // 1-based x index
    int col = 0; // 1-based d index
    Rational transcribed;
    Rational oracle;
};

/// Entry-wise differences between transcribed and oracle matrices over all
/// 52 operators.
std::vector<ErrataRecord> validate_table();

/// Weights of x_1..x_26 from the oracle Cartan operators.
const VariableWeights &variable_weights();
WeightVector weight(const Polynomial &f);

// ---------------------------------------------------------------------------
// Invariants and the zeta module

Polynomial eta1();

/// zeta_1..zeta_26. Indices 2..14 come from the lowering recursions and
/// 15..26 from zeta_r = -tau(zeta_{27-r}).
const Polynomial &zeta(int r);

/// zeta_r = tau(zeta_{27-r}) without the sign, for r = 15..26 (r <= 14
/// gives zeta(r)). Kept to show that this reading breaks equivariance.
Polynomial zeta_tau_literal(int r);

/// Printed closed forms of zeta_1..zeta_14.
Polynomial zeta_printed(int r);

/// One step of the lowering chain: zeta_r = sign * E-(simple) zeta_source.
struct ZetaStep
{
    int index;
    int sign;
    int simple_root;
    int source;
};
const std::vector<ZetaStep> &zeta_recursion();

Polynomial theta();
Polynomial theta_printed();

/// Cubic invariant assembled from the pairing with the zeta module.
Polynomial eta2();

/// Same assembly using zeta_tau_literal.
Polynomial eta2_tau_literal();

/// The typeset expansion 9(1 + tau)[...] + ...
Polynomial eta2_printed();

/// Failures of E(x_i) = a x_j  =>  E(zeta_i) = a zeta_j over the eight
/// simple operators and all 26 indices, for a given zeta family.
int zeta_equivariance_failures(const std::vector<Polynomial> &family);
std::vector<Polynomial> zeta_family();
std::vector<Polynomial> zeta_family_tau_literal();

/// Labels of operators that do not annihilate f (out of all 52).
std::vector<OperatorLabel> non_annihilating_operators(const Polynomial &f);

struct IdentityCheck
{
    std::string name;
    bool holds = false;          // typeset form
    Polynomial difference;       // lhs - rhs of the typeset form
    std::optional<bool> corrected_holds;
    std::string correction;      // what was changed, empty if nothing
};

/// Polynomial identities used to eliminate x14, x15, x17, ..., x26 in the
/// classification argument, checked against zeta(), eta1() and eta2().
std::vector<IdentityCheck> verify_elimination_identities();

// ---------------------------------------------------------------------------
// Singular vectors

struct SingularEntry
{
    WeightVector weight{};
    std::size_t dim = 0;
    std::vector<Polynomial> basis;
};

struct SingularReport
{
    int degree = 0;
    std::vector<SingularEntry> entries; // weights in decreasing lex order
    std::size_t predicted = 0;
    bool all_positive_annihilate = false;
    bool products_span = false;
    std::size_t total() const;
};

/// Joint kernel of the four simple raising operators on each dominant
/// weight space of degree k.
SingularReport singular_vectors(int k);

/// Exponent tuples (m1..m5) with m1 + 2m2 + 3m3 + 2m4 + 3m5 = k.
std::vector<std::array<int, 5>> singular_exponents(int k);
std::size_t predicted_singular_count(int k);

/// x1^m1 zeta1^m2 theta^m3 eta1^m4 eta2^m5.
Polynomial singular_product(const std::array<int, 5> &m);

/// m3 lambda3 + (m1 + m2) lambda4.
WeightVector singular_product_weight(const std::array<int, 5> &m);

// ---------------------------------------------------------------------------
// Laplacian and harmonics

/// Invariant Laplacian: 3 sum_{r<=12} d_r d_{27-r} - 3 d13^2 + 3 d13 d14 - 3 d14^2.
const SecondOrderOperator &laplacian();

/// The typeset operator 3 sum d_r d_{27-r} - d13^2 - d13 d14 - d14^2.
const SecondOrderOperator &printed_laplacian();

Polynomial apply_laplacian(const Polynomial &f);

/// Operators D (out of the 52) with [delta, D] nonzero on some degree-k
/// monomial.
std::vector<OperatorLabel> laplacian_commutation_failures(const SecondOrderOperator &delta, int k);

struct HarmonicWitness
{
    std::string name;
    Polynomial value;
    bool harmonic = false;
};

struct HarmonicBound
{
    int degree = 0;
    int bound = 0;
    std::vector<HarmonicWitness> witnesses;
    int verified() const;
};

/// Bound floor(k/3) + floor((k-2)/3) + 2 with witnesses x1^k1 theta^k2
/// (k1 + 3k2 = k) and x1^m1 zeta1 theta^m2 (m1 + 3m2 + 2 = k). k >= 2.
HarmonicBound harmonic_summand_bound(int k);

} // namespace f4rep

#endif

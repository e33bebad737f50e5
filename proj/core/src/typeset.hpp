// Formulas as typeset, kept as strings in the compact parser syntax.
#ifndef F4REP_TYPESET_HPP
#define F4REP_TYPESET_HPP

#include <array>
#include <string>
#include <vector>

namespace f4rep::typeset
{

struct RootFormula
{
    std::array<int, 4> coeffs;
    std::string formula;
};

const std::vector<RootFormula> &root_operators();
const std::array<std::string, 4> &cartan_operators();

/// zeta_1..zeta_14, index 0 unused.
const std::array<std::string, 15> &zeta();
const std::string &theta();

/// Pieces of the cubic-invariant expansion.
struct CubicExpansion
{
    std::string tau_symmetrized; // multiplied by 9(1 + tau)
    std::string cubic_cartan;    // 2x13^3 + ...
    std::string mixed;           // 3x1(2x13 + x14)x26 + 3x2(x13 + 2x14)x25
    std::string x13_bracket;     // multiplied by -3x13
    std::string x14_bracket;     // multiplied by -3x14
};
const CubicExpansion &cubic_expansion();

/// One elimination identity: lhs = rhs, with rhs = zeta_sign * zeta_index + rest
/// (zeta_index 0 for none).
struct LinearElimination
{
    std::string lhs;
    int zeta_sign;
    int zeta_index;
    std::string rest;
};
const std::vector<LinearElimination> &linear_eliminations();

/// 3x2x25 + 3x1x26 = eta1 - 3 sum_{r=3}^{12} x_r x_{27-r} + cartan_part.
struct QuadraticElimination
{
    std::string lhs;
    std::string cartan_part;
};
const QuadraticElimination &quadratic_elimination();

/// The cubic relation: lhs = eta2 + rest_plain - 9(1 + tau)[tau_part]
///   + 3x13[x13_bracket] - 3x14[x14_bracket].
struct CubicElimination
{
    std::string lhs;
    std::string rest_plain;
    std::string tau_part;
    std::string x13_bracket;
    std::string x14_bracket;
};
const CubicElimination &cubic_elimination();

} // namespace f4rep::typeset

#endif

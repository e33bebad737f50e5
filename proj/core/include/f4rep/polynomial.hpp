#ifndef F4REP_POLYNOMIAL_HPP
#define F4REP_POLYNOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "f4rep/rational.hpp"

namespace f4rep
{

inline constexpr int kNumVars = 26;

/// Monomial in x_1..x_26. Variables are 1-based in the public API.
class Monomial
{
public:
    using Exponents = std::array<std::uint8_t, kNumVars>;

    Monomial() = default;
    explicit Monomial(const Exponents &e) : e_(e) {}

    static Monomial variable(int i);

    int exponent(int i) const;
    void set_exponent(int i, int value);
    int degree() const;
    bool is_one() const { return degree() == 0; }
    const Exponents &exponents() const { return e_; }

    Monomial operator*(const Monomial &o) const;

    /// "1", "x1", "x1^2x13", ...
    std::string to_string() const;

    auto operator<=>(const Monomial &) const = default;

private:
    Exponents e_{};
};

/// Graded lexicographic order: higher degree first, then larger exponent of
/// x1, then of x2, and so on.
struct GrlexOrder
{
    bool operator()(const Monomial &a, const Monomial &b) const;
};

class Polynomial
{
public:
    using TermMap = std::map<Monomial, Rational, GrlexOrder>;

    Polynomial() = default;
    Polynomial(const Rational &c);
    Polynomial(int c) : Polynomial(Rational(c)) {}

    static Polynomial variable(int i, const Rational &c = 1);
    static Polynomial monomial(const Monomial &m, const Rational &c = 1);

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial &m) const;

    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial &m, const Rational &c);

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Rational &s);
    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial &o) const;
    friend Polynomial operator*(const Rational &s, Polynomial p) { return p *= s; }

    Polynomial pow(unsigned n) const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

    /// Compact form accepted by parse_polynomial, e.g. "2x1x13 - 3x2x12".
    std::string to_string() const;

private:
    TermMap terms_;
};

Polynomial partial(const Polynomial &f, int var);

/// Index involution r -> 27 - r, fixing 13 and 14.
int tau_index(int r);

/// x_r -> x_{27-r} for r outside {13, 14}; x13 and x14 change sign.
Polynomial tau(const Polynomial &f);

/// First-order operator sum_j c_j d/dx_j, stored by variable. The
/// coefficient c_j is the image of x_j.
class Derivation
{
public:
    using TermMap = std::map<int, Polynomial>;

    Derivation() = default;

    static Derivation term(const Polynomial &coef, int var);

    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Polynomial &coef, int var);

    /// Image of x_var.
    Polynomial coefficient(int var) const;

    Polynomial apply(const Polynomial &f) const;
    Polynomial operator()(const Polynomial &f) const { return apply(f); }

    Derivation &operator+=(const Derivation &o);
    Derivation &operator-=(const Derivation &o);
    Derivation &operator*=(const Rational &s);
    Derivation operator+(const Derivation &o) const;
    Derivation operator-(const Derivation &o) const;
    Derivation operator-() const;
    friend Derivation operator*(const Rational &s, Derivation d) { return d *= s; }

    friend bool operator==(const Derivation &, const Derivation &) = default;

    /// Sum of terms "c x_r d_s" in the compact form of parse_derivation,
    /// e.g. "x4d6 - 2x11d14".
    std::string to_string() const;

private:
    TermMap terms_;
};

/// D1 D2 - D2 D1.
Derivation commutator(const Derivation &d1, const Derivation &d2);

/// tau D tau.
Derivation tau_op(const Derivation &d);

using WeightVector = std::array<int, 4>;
using VariableWeights = std::array<WeightVector, kNumVars>;

std::string to_string(const WeightVector &w);
bool is_dominant(const WeightVector &w);
WeightVector operator+(const WeightVector &a, const WeightVector &b);

/// Reads the diagonal of four Cartan operators. Throws std::invalid_argument
/// when an operator is not diagonal on the variables.
VariableWeights weights_from_cartan(const std::array<Derivation, 4> &cartan);

WeightVector monomial_weight(const Monomial &m, const VariableWeights &w);

/// Raised by weight() when f mixes weights.
class WeightMismatchError : public std::domain_error
{
public:
    WeightMismatchError(const WeightVector &first, const WeightVector &second);
    const WeightVector &first() const { return first_; }
    const WeightVector &second() const { return second_; }

private:
    WeightVector first_;
    WeightVector second_;
};

/// Common weight of all terms. The zero polynomial has no weight and raises
/// std::domain_error.
WeightVector weight(const Polynomial &f, const VariableWeights &w);

/// All degree-k monomials in grlex order.
std::vector<Monomial> monomials_of_degree(int k);

/// Degree-k monomials grouped by weight; each group in grlex order.
std::map<WeightVector, std::vector<Monomial>> weight_decomposition(int k, const VariableWeights &w);

std::vector<Monomial> weight_subspace_basis(int k, const WeightVector &target, const VariableWeights &w);

/// Constant-coefficient operator sum c d_i d_j.
class SecondOrderOperator
{
public:
    struct Term
    {
        Rational coef;
        int i;
        int j;
    };

    void add_term(const Rational &c, int i, int j);
    const std::vector<Term> &terms() const { return terms_; }
    Polynomial apply(const Polynomial &f) const;
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Parses sums such as "2x1x13 + x1x14 - 3x2x12", "x1^2" or "-1/3x4".
/// Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(const std::string &text);

/// Parses sums of "c x_r d_s" terms such as "+x4d6 -2x11d14".
Derivation parse_derivation(const std::string &text);

} // namespace f4rep

#endif

#ifndef F4REP_IDENTITY_HPP
#define F4REP_IDENTITY_HPP

#include <array>
#include <optional>
#include <vector>

#include "f4rep/rational.hpp"

namespace f4rep
{

using F4Vector = std::array<Rational, 4>;

/// Euclidean data of F4 in the simple-root basis: two long simple roots
/// (norm 2) followed by two short ones (norm 1).
struct F4MetricData
{
    std::array<F4Vector, 4> gram;
    std::vector<std::array<int, 4>> positive_roots;
    std::array<F4Vector, 4> fundamental_weights; // (lambda_i, a_j^vee) = delta_ij
    F4Vector delta;                              // sum of the fundamental weights

    Rational inner(const F4Vector &u, const F4Vector &v) const;
    Rational inner(const F4Vector &u, const std::array<int, 4> &root) const;

    static const F4MetricData &get();
};

/// Dimension of the irreducible module of highest weight k lambda3 + l lambda4
/// from the product over positive roots.
Integer weyl_dim(unsigned long k, unsigned long l);

/// (l+1)(k+3)(k+l+4)(2k+l+7)(3k+l+10)(3k+2l+11) prod_{r=1..5}(k+r)
/// prod_{s=2..6}(k+l+s) prod_{q=5..9}(2k+l+q).
Integer closed_form_numerator(unsigned long k, unsigned long l);

/// The numerator at k = l = 0: 12070840320000.
Integer closed_form_constant();

/// 39504568320000, the constant as typeset.
Integer printed_closed_form_constant();

/// Numerator over closed_form_constant(). Throws std::domain_error if the
/// quotient is not integral.
Integer closed_form_dim(unsigned long k, unsigned long l);

/// Numerator over the typeset constant, as an exact rational.
Rational printed_closed_form_dim(unsigned long k, unsigned long l);

/// Power series with big-integer coefficients, truncated after t^order.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, const std::vector<Integer> &coeffs);

    /// (1 - t)^a for any integer a.
    static TruncatedSeries one_minus_t_power(int order, int a);

    int order() const { return order_; }
    const Integer &operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
    Integer &operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
    const std::vector<Integer> &coefficients() const { return c_; }

    TruncatedSeries operator+(const TruncatedSeries &o) const;
    TruncatedSeries operator-(const TruncatedSeries &o) const;
    TruncatedSeries operator*(const TruncatedSeries &o) const;
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    int order_;
    std::vector<Integer> c_;
};

/// s_n = sum over 3k1 + 2k2 + k3 = n of weyl_dim(k1, k2 + k3).
TruncatedSeries rhs_series(int order);

struct Identity24Result
{
    int order = 0;
    bool pass = false;
    std::optional<int> first_mismatch;
    std::vector<Integer> lhs; // 1, 2, 2, 1, 0, ...
    std::vector<Integer> rhs; // (1 - t)^24 times the series
};

/// (1 - t)^24 sum d(k1, k2 + k3) t^(3k1 + 2k2 + k3) = (1 + t)(1 + t + t^2).
/// Throws std::invalid_argument for order < 3.
Identity24Result verify_identity_24(int order);

struct Identity26Result
{
    int order = 0;
    bool form_26 = false;     // 1/(1-t)^26 = series / ((1-t^2)(1-t^3))
    bool form_24 = false;     // 1/(1-t)^24 = series / ((1+t)(1+t+t^2))
    bool product_form = false; // (1-t)^24 series = (1+t)(1+t+t^2)
    bool consistent() const { return form_26 == form_24 && form_24 == product_form; }
    bool pass() const { return form_26 && form_24 && product_form; }
};

/// Checks the three equivalent forms after clearing denominators.
Identity26Result verify_identity_26(int order);

/// sum over m1 + 2m2 + 3m3 + 2m4 + 3m5 = k of weyl_dim(m3, m1 + m2).
Integer branching_sum(unsigned long k);

} // namespace f4rep

#endif

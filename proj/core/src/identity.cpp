#include "f4rep/identity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace f4rep
{

namespace
{

// Solves G x = b over Q for the 4x4 positive definite Gram matrix.
F4Vector solve(std::array<F4Vector, 4> a, F4Vector b)
{
    for (int c = 0; c < 4; ++c) {
        int p = c;
        while (a[p][c] == 0)
            ++p;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (int r = 0; r < 4; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c] / a[c][c];
            for (int k = 0; k < 4; ++k)
                a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    F4Vector x;
    for (int i = 0; i < 4; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

F4MetricData build_metric()
{
    F4MetricData d;
    for (auto &row : d.gram)
        row.fill(0);
    d.gram[0][0] = 2;
    d.gram[1][1] = 2;
    d.gram[2][2] = 1;
    d.gram[3][3] = 1;
    d.gram[0][1] = d.gram[1][0] = -1;
    d.gram[1][2] = d.gram[2][1] = -1;
    d.gram[2][3] = d.gram[3][2] = Rational(-1, 2);

    // Orbit of the simple roots under the simple reflections.
    auto pairing = [&](const std::array<int, 4> &v, int i) {
        Rational s = 0;
        for (int j = 0; j < 4; ++j)
            s += d.gram[i][j] * v[j];
        return s;
    };
    std::set<std::array<int, 4>> roots;
    std::vector<std::array<int, 4>> frontier;
    for (int i = 0; i < 4; ++i) {
        std::array<int, 4> e{};
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::array<int, 4>> next;
        for (const auto &v : frontier)
            for (int i = 0; i < 4; ++i) {
                Rational c = 2 * pairing(v, i) / d.gram[i][i];
                auto w = v;
                w[i] -= static_cast<int>(c.get_num().get_si());
                if (roots.insert(w).second)
                    next.push_back(w);
            }
        frontier = std::move(next);
    }
    for (const auto &r : roots)
        if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }))
            d.positive_roots.push_back(r);
    std::sort(d.positive_roots.begin(), d.positive_roots.end(), [](const auto &a, const auto &b) {
        int ha = a[0] + a[1] + a[2] + a[3], hb = b[0] + b[1] + b[2] + b[3];
        return ha != hb ? ha < hb : a > b;
    });

    for (auto &x : d.delta)
        x = 0;
    for (int i = 0; i < 4; ++i) {
        F4Vector b;
        b.fill(0);
        b[i] = d.gram[i][i] / 2;
        d.fundamental_weights[i] = solve(d.gram, b);
        for (int j = 0; j < 4; ++j)
            d.delta[j] += d.fundamental_weights[i][j];
    }
    return d;
}

Integer integral(const Rational &q, const char *what)
{
    if (q.get_den() != 1)
        throw std::domain_error(std::string(what) + " is not an integer: " + to_string(q));
    return q.get_num();
}

} // namespace

Rational F4MetricData::inner(const F4Vector &u, const F4Vector &v) const
{
    Rational s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (gram[i][j] != 0)
                s += u[i] * gram[i][j] * v[j];
    return s;
}

Rational F4MetricData::inner(const F4Vector &u, const std::array<int, 4> &root) const
{
    F4Vector v;
    for (int i = 0; i < 4; ++i)
        v[i] = root[i];
    return inner(u, v);
}

const F4MetricData &F4MetricData::get()
{
    static const F4MetricData d = build_metric();
    return d;
}

Integer weyl_dim(unsigned long k, unsigned long l)
{
    const F4MetricData &m = F4MetricData::get();
    F4Vector shifted;
    for (int i = 0; i < 4; ++i)
        shifted[i] = m.delta[i] + Rational(k) * m.fundamental_weights[2][i] + Rational(l) * m.fundamental_weights[3][i];
    Rational num = 1, den = 1;
    for (const auto &r : m.positive_roots) {
        num *= m.inner(shifted, r);
        den *= m.inner(m.delta, r);
    }
    return integral(num / den, "Weyl quotient");
}

Integer closed_form_numerator(unsigned long k, unsigned long l)
{
    const Integer K(k), L(l);
    Integer n = (L + 1) * (K + 3) * (K + L + 4) * (2 * K + L + 7) * (3 * K + L + 10) * (3 * K + 2 * L + 11);
    for (int r = 1; r <= 5; ++r)
        n *= K + r;
    for (int s = 2; s <= 6; ++s)
        n *= K + L + s;
    for (int q = 5; q <= 9; ++q)
        n *= 2 * K + L + q;
    return n;
}

Integer closed_form_constant() { return Integer("12070840320000"); }

Integer printed_closed_form_constant() { return Integer("39504568320000"); }

Integer closed_form_dim(unsigned long k, unsigned long l)
{
    Rational q(closed_form_numerator(k, l), closed_form_constant());
    q.canonicalize();
    return integral(q, "closed form");
}

Rational printed_closed_form_dim(unsigned long k, unsigned long l)
{
    Rational q(closed_form_numerator(k, l), printed_closed_form_constant());
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(int order) : order_(order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    c_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

TruncatedSeries::TruncatedSeries(int order, const std::vector<Integer> &coeffs) : TruncatedSeries(order)
{
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i)
        c_[i] = coeffs[i];
}

TruncatedSeries TruncatedSeries::one_minus_t_power(int order, int a)
{
    TruncatedSeries s(order);
    for (int n = 0; n <= order; ++n) {
        if (a >= 0) {
            if (n > a)
                break;
            Integer b = binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(n));
            s[n] = n % 2 ? Integer(-b) : b;
        } else {
            // (1 - t)^(-m) = sum C(n + m - 1, m - 1) t^n
            const unsigned long m = static_cast<unsigned long>(-a);
            s[n] = binomial(static_cast<unsigned long>(n) + m - 1, m - 1);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries &o) const
{
    TruncatedSeries r(std::min(order_, o.order_));
    for (int n = 0; n <= r.order_; ++n)
        r[n] = (*this)[n] + o[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries &o) const
{
    TruncatedSeries r(std::min(order_, o.order_));
    for (int n = 0; n <= r.order_; ++n)
        r[n] = (*this)[n] - o[n];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries &o) const
{
    TruncatedSeries r(std::min(order_, o.order_));
    for (int i = 0; i <= r.order_; ++i) {
        if ((*this)[i] == 0)
            continue;
        for (int j = 0; i + j <= r.order_; ++j)
            r[i + j] += (*this)[i] * o[j];
    }
    return r;
}

TruncatedSeries rhs_series(int order)
{
    TruncatedSeries s(order);
    for (int k1 = 0; 3 * k1 <= order; ++k1)
        for (int k2 = 0; 3 * k1 + 2 * k2 <= order; ++k2)
            for (int k3 = 0; 3 * k1 + 2 * k2 + k3 <= order; ++k3)
                s[3 * k1 + 2 * k2 + k3] += weyl_dim(static_cast<unsigned long>(k1), static_cast<unsigned long>(k2 + k3));
    return s;
}

namespace
{

TruncatedSeries cubic_factor(int order)
{
    // (1 + t)(1 + t + t^2) = 1 + 2t + 2t^2 + t^3
    return TruncatedSeries(order, {1, 2, 2, 1});
}

} // namespace

Identity24Result verify_identity_24(int order)
{
    if (order < 3)
        throw std::invalid_argument("identity check needs order >= 3");
    Identity24Result out;
    out.order = order;
    const TruncatedSeries lhs = cubic_factor(order);
    const TruncatedSeries rhs = TruncatedSeries::one_minus_t_power(order, 24) * rhs_series(order);
    out.lhs = lhs.coefficients();
    out.rhs = rhs.coefficients();
    for (int n = 0; n <= order; ++n)
        if (lhs[n] != rhs[n]) {
            out.first_mismatch = n;
            break;
        }
    out.pass = !out.first_mismatch.has_value();
    return out;
}

Identity26Result verify_identity_26(int order)
{
    Identity26Result out;
    out.order = order;
    const TruncatedSeries s = rhs_series(order);
    const TruncatedSeries t2(order, {1, 0, -1});
    const TruncatedSeries t3(order, {1, 0, 0, -1});
    out.form_26 = TruncatedSeries::one_minus_t_power(order, -26) * t2 * t3 == s;
    out.form_24 = TruncatedSeries::one_minus_t_power(order, -24) * cubic_factor(order) == s;
    out.product_form = TruncatedSeries::one_minus_t_power(order, 24) * s == cubic_factor(order);
    return out;
}

Integer branching_sum(unsigned long k)
{
    Integer total = 0;
    const long K = static_cast<long>(k);
    for (long m5 = 0; 3 * m5 <= K; ++m5)
        for (long m4 = 0; 3 * m5 + 2 * m4 <= K; ++m4)
            for (long m3 = 0; 3 * m5 + 2 * m4 + 3 * m3 <= K; ++m3)
                for (long m2 = 0; 3 * m5 + 2 * m4 + 3 * m3 + 2 * m2 <= K; ++m2) {
                    const long m1 = K - (3 * m5 + 2 * m4 + 3 * m3 + 2 * m2);
                    total += weyl_dim(static_cast<unsigned long>(m3), static_cast<unsigned long>(m1 + m2));
                }
    return total;
}

} // namespace f4rep

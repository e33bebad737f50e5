#include <doctest.h>

#include "f4rep/identity.hpp"

using namespace f4rep;

namespace
{

using Vec = std::array<Rational, 4>;

// F4 in orthonormal coordinates: e_i, e_i +- e_j and (e1 +- e2 +- e3 +- e4)/2.
std::vector<Vec> euclidean_positive_roots()
{
    std::vector<Vec> roots;
    for (int i = 0; i < 4; ++i) {
        Vec v{};
        v[i] = 1;
        roots.push_back(v);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int s : {1, -1}) {
                Vec v{};
                v[i] = 1;
                v[j] = s;
                roots.push_back(v);
            }
    for (int mask = 0; mask < 8; ++mask) {
        Vec v{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
        for (int b = 0; b < 3; ++b)
            if (mask & (1 << b))
                v[b + 1] = -v[b + 1];
        roots.push_back(v);
    }
    return roots;
}

Rational dot(const Vec &a, const Vec &b)
{
    Rational s = 0;
    for (int i = 0; i < 4; ++i)
        s += a[i] * b[i];
    return s;
}

Integer oracle_dim(long k, long l)
{
    static const std::vector<Vec> roots = euclidean_positive_roots();
    const Vec w3{Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
    const Vec w4{1, 0, 0, 0};
    const Vec rho{Rational(11, 2), Rational(5, 2), Rational(3, 2), Rational(1, 2)};
    Vec shifted;
    for (int i = 0; i < 4; ++i)
        shifted[i] = Rational(k) * w3[i] + Rational(l) * w4[i] + rho[i];
    Rational q = 1;
    for (const auto &a : roots)
        q *= dot(shifted, a) / dot(rho, a);
    REQUIRE(q.get_den() == 1);
    return q.get_num();
}

Integer choose(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

TEST_CASE("metric data")
{
    const auto &m = F4MetricData::get();
    CHECK(m.positive_roots.size() == 24);
    CHECK(m.gram[0][0] == 2);
    CHECK(m.gram[3][3] == 1);
    CHECK(m.gram[1][2] == -1);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::array<int, 4> aj{};
            aj[j] = 1;
            const Rational pairing = 2 * m.inner(m.fundamental_weights[i], aj) / m.gram[j][j];
            CHECK(pairing == (i == j ? 1 : 0));
        }
}

TEST_CASE("dimensions agree with a Euclidean oracle")
{
    for (unsigned long k = 0; k <= 6; ++k)
        for (unsigned long l = 0; l <= 6; ++l) {
            const Integer d = oracle_dim(static_cast<long>(k), static_cast<long>(l));
            CHECK(weyl_dim(k, l) == d);
            CHECK(closed_form_dim(k, l) == d);
        }
    CHECK(weyl_dim(0, 1) == 26);
    CHECK(weyl_dim(1, 0) == 273);
    CHECK(weyl_dim(5, 5) == Integer("106938703872"));
}

TEST_CASE("closed-form constant")
{
    CHECK(closed_form_constant() == Integer("12070840320000"));
    CHECK(closed_form_numerator(0, 0) == closed_form_constant());
    CHECK(printed_closed_form_constant() == Integer("39504568320000"));
    CHECK(printed_closed_form_dim(0, 0) == Rational(11, 36));
}

TEST_CASE("truncated series arithmetic")
{
    const TruncatedSeries a = TruncatedSeries::one_minus_t_power(6, 1);
    CHECK(a[0] == 1);
    CHECK(a[1] == -1);
    CHECK(a[2] == 0);
    const TruncatedSeries inv = TruncatedSeries::one_minus_t_power(6, -1);
    for (int n = 0; n <= 6; ++n)
        CHECK(inv[n] == 1);
    const TruncatedSeries one(6, {1});
    CHECK(a * inv == one);
    const TruncatedSeries b = TruncatedSeries::one_minus_t_power(6, -26);
    for (int n = 0; n <= 6; ++n)
        CHECK(b[n] == choose(25 + n, 25));
    CHECK((b - b) == TruncatedSeries(6));
}

TEST_CASE("series of the quotient module")
{
    const std::vector<long> expected = {1, 26, 350, 3249, 23374, 138880, 709280, 3199950};
    const TruncatedSeries s = rhs_series(7);
    for (int n = 0; n <= 7; ++n)
        CHECK(s[n] == expected[static_cast<std::size_t>(n)]);
}

TEST_CASE("generating function identity")
{
    const Identity24Result r = verify_identity_24(30);
    CHECK(r.pass);
    CHECK_FALSE(r.first_mismatch.has_value());
    REQUIRE(r.rhs.size() == 31);
    CHECK(r.rhs[0] == 1);
    CHECK(r.rhs[1] == 2);
    CHECK(r.rhs[2] == 2);
    CHECK(r.rhs[3] == 1);
    for (int n = 4; n <= 30; ++n)
        CHECK(r.rhs[static_cast<std::size_t>(n)] == 0);
    CHECK_THROWS_AS(verify_identity_24(2), std::invalid_argument);

    const Identity26Result f = verify_identity_26(30);
    CHECK(f.pass());
    CHECK(f.consistent());
}

TEST_CASE("branching sums match the polynomial ring")
{
    for (unsigned long k = 0; k <= 8; ++k)
        CHECK(branching_sum(k) == choose(k + 25, 25));
}

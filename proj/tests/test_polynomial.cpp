#include <doctest.h>

#include <numeric>

#include "f4rep/polynomial.hpp"

using namespace f4rep;

namespace
{

Polynomial x(int i) { return Polynomial::variable(i); }

std::size_t choose(std::size_t n, std::size_t k)
{
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Toy weights: x_r has weight (r, 0, 0, 0) for r <= 13 and (27 - r, 1, 0, 0) otherwise.
VariableWeights toy_weights()
{
    VariableWeights w{};
    for (int r = 1; r <= 26; ++r)
        w[r - 1] = r <= 13 ? WeightVector{r, 0, 0, 0} : WeightVector{27 - r, 1, 0, 0};
    return w;
}

} // namespace

TEST_CASE("ring arithmetic")
{
    const Polynomial f = x(1) + x(2);
    CHECK(f * f == x(1) * x(1) + 2 * (x(1) * x(2)) + x(2) * x(2));
    CHECK(f.pow(3).size() == 4);
    CHECK((f - f).is_zero());
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial(5).degree() == 0);
    CHECK((x(1) * x(13) + x(2)).degree() == 2);
    CHECK_FALSE((x(1) * x(13) + x(2)).is_homogeneous());
    CHECK(f.pow(0) == Polynomial(1));
    CHECK((Rational(1, 2) * x(3)).coefficient(Monomial::variable(3)) == Rational(1, 2));
}

TEST_CASE("monomials")
{
    Monomial m = Monomial::variable(1) * Monomial::variable(1) * Monomial::variable(13);
    CHECK(m.degree() == 3);
    CHECK(m.exponent(1) == 2);
    CHECK(m.to_string() == "x1^2x13");
    CHECK(Monomial().to_string() == "1");
    CHECK_THROWS_AS(Monomial::variable(0), std::out_of_range);
    CHECK_THROWS_AS(Monomial::variable(27), std::out_of_range);
}

TEST_CASE("grlex order and printing")
{
    const Polynomial f = x(2) + x(1) * x(13) - 3 * (x(2) * x(12)) + 7;
    CHECK(f.to_string() == "x1x13 - 3x2x12 + x2 + 7");
    CHECK(Polynomial().to_string() == "0");
    CHECK((-x(4)).to_string() == "-x4");
    CHECK((Rational(-1, 3) * x(4)).to_string() == "-1/3x4");
}

TEST_CASE("parser round trip")
{
    const Polynomial f = parse_polynomial("2x1x13 + x1x14 - 3x2x12");
    CHECK(f == 2 * (x(1) * x(13)) + x(1) * x(14) - 3 * (x(2) * x(12)));
    CHECK(parse_polynomial(f.to_string()) == f);
    CHECK(parse_polynomial("x1^2") == x(1) * x(1));
    CHECK(parse_polynomial("-1/3x4") == Rational(-1, 3) * x(4));
    CHECK(parse_polynomial("3*x5") == 3 * x(5));
    CHECK_THROWS_AS(parse_polynomial("2y1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x27"), std::invalid_argument);
    CHECK_THROWS_AS(parse_polynomial("x1 +"), std::invalid_argument);

    const Derivation d = parse_derivation("+x4d6 -2x11d14");
    CHECK(d.coefficient(6) == x(4));
    CHECK(d.coefficient(14) == -2 * x(11));
    CHECK(d.to_string() == "x4d6 - 2x11d14");
    CHECK(parse_derivation(d.to_string()) == d);
    CHECK_THROWS_AS(parse_derivation("x4"), std::invalid_argument);
}

TEST_CASE("partial derivatives and derivations")
{
    const Polynomial f = x(1) * x(1) * x(13);
    CHECK(partial(f, 1) == 2 * (x(1) * x(13)));
    CHECK(partial(f, 2).is_zero());

    const Derivation d = Derivation::term(x(4), 6);
    CHECK(d(x(6)) == x(4));
    CHECK(d(x(6) * x(6)) == 2 * (x(4) * x(6)));
    CHECK(d(Polynomial(3)).is_zero());

    // Leibniz rule
    const Derivation e = d + Derivation::term(x(2) * x(3), 1);
    const Polynomial g = x(1) * x(6) + x(2);
    const Polynomial h = x(6) * x(6) - x(1);
    CHECK(e(g * h) == e(g) * h + g * e(h));
}

TEST_CASE("commutator")
{
    const Derivation a = Derivation::term(x(1), 2);
    const Derivation b = Derivation::term(x(2), 3);
    CHECK(commutator(a, b) == Derivation::term(x(1), 3));
    CHECK(commutator(a, a).is_zero());
    const Polynomial f = x(3) * x(3) + x(2) * x(3);
    CHECK(commutator(a, b)(f) == a(b(f)) - b(a(f)));
}

TEST_CASE("tau")
{
    CHECK(tau_index(1) == 26);
    CHECK(tau_index(13) == 13);
    CHECK(tau(x(1) * x(13)) == -(x(26) * x(13)));
    CHECK(tau(x(14)) == -x(14));
    const Polynomial f = x(1) * x(2) - 3 * x(13) * x(25) + x(14);
    CHECK(tau(tau(f)) == f);

    const Derivation d = Derivation::term(x(4), 6) + Derivation::term(x(13), 2);
    const Polynomial g = x(6) * x(21) + x(25) * x(13);
    CHECK(tau_op(d)(g) == tau(d(tau(g))));
}

TEST_CASE("weights")
{
    const VariableWeights w = toy_weights();
    CHECK(weight(x(1) * x(2), w) == WeightVector{3, 0, 0, 0});
    CHECK(weight(x(3) + 2 * x(1) * x(2), w) == WeightVector{3, 0, 0, 0});
    CHECK_THROWS_AS(weight(Polynomial(), w), std::domain_error);
    try {
        (void)weight(x(1) + x(2), w);
        FAIL("expected a weight mismatch");
    } catch (const WeightMismatchError &e) {
        CHECK(e.first() != e.second());
    }
    CHECK(is_dominant({0, 1, 0, 2}));
    CHECK_FALSE(is_dominant({0, -1, 0, 2}));
    CHECK(to_string(WeightVector{0, 0, 0, 1}) == "(0,0,0,1)");

    std::array<Derivation, 4> cartan;
    for (int r = 1; r <= 26; ++r)
        cartan[0].add_term(Rational(w[r - 1][0]) * x(r), r);
    CHECK(weights_from_cartan(cartan)[4][0] == 5);
    cartan[1].add_term(x(2), 1);
    CHECK_THROWS_AS(weights_from_cartan(cartan), std::invalid_argument);
}

TEST_CASE("monomial enumeration and weight spaces")
{
    for (int k = 0; k <= 4; ++k) {
        const auto monos = monomials_of_degree(k);
        CHECK(monos.size() == choose(25 + k, k));
        for (std::size_t i = 1; i < monos.size(); ++i)
            CHECK(GrlexOrder{}(monos[i - 1], monos[i]));
        const auto dec = weight_decomposition(k, toy_weights());
        std::size_t total = 0;
        for (const auto &[wt, basis] : dec) {
            total += basis.size();
            CHECK(weight_subspace_basis(k, wt, toy_weights()) == basis);
        }
        CHECK(total == monos.size());
    }
}

TEST_CASE("second-order operators")
{
    SecondOrderOperator op;
    op.add_term(3, 1, 26);
    op.add_term(-1, 13, 13);
    CHECK(op.apply(x(1) * x(26)) == Polynomial(3));
    CHECK(op.apply(x(13) * x(13)) == Polynomial(-2));
    CHECK(op.apply(x(1) * x(1)).is_zero());
}

#include <doctest.h>

#include <set>

#include "f4rep/representation.hpp"

using namespace f4rep;

namespace
{

Polynomial x(int i) { return Polynomial::variable(i); }
Polynomial P(const char *s) { return parse_polynomial(s); }
const Derivation &op(const char *label) { return oracle_operator(OperatorLabel::parse(label)); }

// Coefficient of t^k in 1 / ((1-t)(1-t^2)^2(1-t^3)^2), by repeated
// multiplication with geometric series.
std::size_t product_count(int k)
{
    std::vector<std::size_t> c(k + 1, 0);
    c[0] = 1;
    for (int step : {1, 2, 2, 3, 3})
        for (int n = step; n <= k; ++n)
            c[n] += c[n - step];
    return c[k];
}

} // namespace

TEST_CASE("operator labels")
{
    CHECK(all_operator_labels().size() == 52);
    const std::set<OperatorLabel> distinct(all_operator_labels().begin(), all_operator_labels().end());
    CHECK(distinct.size() == 52);
    CHECK(OperatorLabel::parse("E(0,1,1,0)").to_string() == "E(0,1,1,0)");
    CHECK(OperatorLabel::parse("E+(0,1,1,0)") == OperatorLabel::positive({0, 1, 1, 0}));
    CHECK(OperatorLabel::parse("E-(1,0,0,0)").to_string() == "E-(1,0,0,0)");
    CHECK(OperatorLabel::parse("h3") == OperatorLabel::cartan(3));
    CHECK(OperatorLabel::simple(2, -1) == OperatorLabel::negative({0, 1, 0, 0}));
    CHECK_THROWS_AS(OperatorLabel::parse("E(1,1,1,1,1)"), std::invalid_argument);
    CHECK_THROWS_AS(OperatorLabel::parse("h5"), std::invalid_argument);
    CHECK_THROWS_AS(OperatorLabel::parse("E(3,0,0,0)"), std::invalid_argument);
}

TEST_CASE("operators on generators")
{
    CHECK(op("E(0,1,0,0)")(x(4)) == x(3));
    CHECK(op("E-(1,0,0,0)")(x(4)) == -x(6));
    CHECK(op("h1")(x(6)) == -x(6));
    // D = sum M_ij x_i d_j, so E(0,0,1,0) moves x13 and x14 onto x11.
    CHECK(op("E(0,0,1,0)")(x(13)) == x(11));
    CHECK(op("E(0,0,1,0)")(x(14)) == -2 * x(11));
    for (const auto &label : all_operator_labels())
        CHECK(derivation_from_matrix(matrix_of(oracle_operator(label))) == oracle_operator(label));
}

TEST_CASE("operators close under the bracket")
{
    const auto &a = OperatorLabel::positive({0, 1, 0, 0});
    const auto &b = OperatorLabel::positive({0, 0, 1, 0});
    const Derivation c = commutator(oracle_operator(a), oracle_operator(b));
    const Matrix m = ad_on_V(bracket(operator_element(a), operator_element(b)));
    CHECK(c == derivation_from_matrix(m));
}

TEST_CASE("typeset operator table differs only by four sign flips")
{
    const auto errata = validate_table();
    REQUIRE(errata.size() == 4);
    std::set<std::string> labels;
    for (const auto &e : errata) {
        CHECK(e.transcribed == -e.oracle);
        labels.insert(e.label.to_string());
    }
    CHECK(labels == std::set<std::string>{"E(0,1,1,0)", "E-(0,1,1,0)"});
    CHECK(transcribed_operator(OperatorLabel::positive({1, 0, 0, 0})) == op("E(1,0,0,0)"));
    CHECK_FALSE(transcribed_formula(OperatorLabel::cartan(1)).empty());
}

TEST_CASE("weights of the generators")
{
    CHECK(weight(x(1)) == WeightVector{0, 0, 0, 1});
    CHECK(weight(x(13)) == WeightVector{0, 0, 0, 0});
    CHECK(weight(x(26)) == WeightVector{0, 0, 0, -1});
    CHECK(weight(x(1) * x(26)) == WeightVector{0, 0, 0, 0});
    CHECK_THROWS_AS(weight(x(1) + x(2)), WeightMismatchError);
}

TEST_CASE("quadratic invariant and the zeta module")
{
    CHECK(eta1() == P("3x1x26 + 3x2x25 + 3x3x24 + 3x4x23 + 3x5x22 + 3x6x21 + 3x7x20 + 3x8x19 + 3x9x18 "
                      "+ 3x10x17 + 3x11x16 + 3x12x15 - x13^2 - x13x14 - x14^2"));
    CHECK(non_annihilating_operators(eta1()).empty());
    CHECK(zeta(1) == P("2x1x13 + x1x14 - 3x2x12 - 3x3x10 + 3x4x8 - 3x5x6"));
    CHECK(zeta(2) == P("-x2x13 + x2x14 + 3x1x15 - 3x3x11 + 3x4x9 - 3x6x7"));
    for (int r = 1; r <= 14; ++r)
        CHECK(zeta(r) == zeta_printed(r));
    for (int r = 15; r <= 26; ++r)
        CHECK(zeta(r) == -tau(zeta(27 - r)));
    CHECK(zeta_recursion().size() == 13);
    CHECK(zeta_equivariance_failures(zeta_family()) == 0);
    CHECK(zeta_equivariance_failures(zeta_family_tau_literal()) == 6);
}

TEST_CASE("theta and the cubic invariant")
{
    CHECK(theta() == theta_printed());
    CHECK(weight(theta()) == WeightVector{0, 0, 1, 0});
    CHECK(eta2().degree() == 3);
    CHECK(non_annihilating_operators(eta2()).empty());
    CHECK_FALSE(non_annihilating_operators(eta2_tau_literal()).empty());
    CHECK(eta2_printed() != eta2());
}

TEST_CASE("elimination identities hold as typeset or after one recorded correction")
{
    const auto checks = verify_elimination_identities();
    CHECK(checks.size() == 10);
    for (const auto &c : checks) {
        INFO(c.name);
        if (c.holds) {
            CHECK(c.difference.is_zero());
        } else {
            REQUIRE(c.corrected_holds.has_value());
            CHECK(*c.corrected_holds);
            CHECK_FALSE(c.correction.empty());
        }
    }
}

TEST_CASE("product exponents")
{
    for (int k = 0; k <= 12; ++k) {
        CHECK(singular_exponents(k).size() == product_count(k));
        CHECK(predicted_singular_count(k) == product_count(k));
    }
    CHECK(singular_product({1, 0, 0, 0, 0}) == x(1));
    CHECK(singular_product({0, 0, 0, 1, 0}) == eta1());
    CHECK(singular_product_weight({2, 1, 1, 0, 4}) == WeightVector{0, 0, 1, 3});
}

TEST_CASE("singular vectors in low degree")
{
    const std::size_t expected[] = {1, 1, 3, 5, 8};
    for (int k = 0; k <= 4; ++k) {
        const SingularReport rep = singular_vectors(k);
        CHECK(rep.total() == expected[k]);
        CHECK(rep.predicted == expected[k]);
        CHECK(rep.all_positive_annihilate);
        CHECK(rep.products_span);
    }
    const SingularReport two = singular_vectors(2);
    REQUIRE(two.entries.size() == 3);
    CHECK(two.entries[0].weight == WeightVector{0, 0, 0, 2});
    CHECK(two.entries[1].weight == WeightVector{0, 0, 0, 1});
    CHECK(two.entries[2].weight == WeightVector{0, 0, 0, 0});
    CHECK(two.entries[0].basis[0] == x(1) * x(1));
    CHECK(two.entries[1].basis[0] == zeta(1));
    CHECK(two.entries[2].basis[0] == eta1());
    CHECK_THROWS(singular_vectors(-1));
}

TEST_CASE("Laplacian")
{
    CHECK(apply_laplacian(x(1) * x(26)) == Polynomial(3));
    CHECK(apply_laplacian(x(1) * x(1)).is_zero());
    CHECK(laplacian().apply(x(13) * x(14)) == Polynomial(3));
    CHECK(laplacian_commutation_failures(laplacian(), 3).empty());
    CHECK(laplacian_commutation_failures(printed_laplacian(), 3).size() == 16);
}

TEST_CASE("harmonic summand bounds")
{
    const int expected[] = {2, 3, 3, 4};
    for (int k = 2; k <= 5; ++k) {
        const HarmonicBound b = harmonic_summand_bound(k);
        CHECK(b.bound == expected[k - 2]);
        CHECK(b.verified() == b.bound);
    }
    CHECK_THROWS_AS(harmonic_summand_bound(1), std::invalid_argument);
}

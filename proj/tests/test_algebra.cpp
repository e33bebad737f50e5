#include <doctest.h>

#include "f4rep/algebra.hpp"

using namespace f4rep;

namespace
{

LatticeVector a(int i) { return LatticeVector::simple(i); }
AlgebraElement E(const LatticeVector &v) { return AlgebraElement::root_vector(v); }
AlgebraElement H(const LatticeVector &v) { return AlgebraElement::cartan(v); }

} // namespace

TEST_CASE("bracket sign conventions")
{
    CHECK(bracket(E(a(1)), E(-a(1))) == -H(a(1)));
    CHECK(bracket(H(a(1)), E(a(1))) == 2 * E(a(1)));
    CHECK(bracket(E(a(1)), E(a(2))).is_zero());
    CHECK(bracket(E(a(1)), E(a(3))) == Rational(cocycle(a(1), a(3))) * E(a(1) + a(3)));
    const AlgebraElement u = E(a(1)) + 3 * E(a(4) + a(2)) - H(a(5));
    CHECK(bracket(u, u).is_zero());
}

TEST_CASE("hat_sigma")
{
    CHECK(hat_sigma(E(a(1))) == E(a(6)));
    CHECK(hat_sigma(H(a(3))) == H(a(5)));
    const AlgebraElement u = E(a(1) + a(3)) - 2 * H(a(2)) + E(-a(4));
    CHECK(hat_sigma(hat_sigma(u)) == u);
    const AlgebraElement v = E(a(3) + a(4)) + H(a(1));
    CHECK(hat_sigma(bracket(u, v)) == bracket(hat_sigma(u), hat_sigma(v)));
}

TEST_CASE("folded root vectors and Cartan elements")
{
    CHECK(f4_root_vector({{1, 0, 0, 0}, 1}) == E(a(2)));
    CHECK(f4_root_vector({{0, 0, 0, 1}, 1}) == E(a(1)) + E(a(6)));
    CHECK(f4_root_vector({{0, 0, 1, 0}, -1}) == E(-a(3)) + E(-a(5)));
    CHECK_THROWS_AS(f4_root_vector({{1, 1, 1, 2}, 1}), std::invalid_argument);
    CHECK(f4_cartan(1) == H(a(2)));
    CHECK(f4_cartan(3) == H(a(3) + a(5)));
    CHECK_THROWS_AS(f4_cartan(5), std::out_of_range);
    CHECK(f4_positive_root_coeffs().size() == 24);
    for (const auto &label : f4_root_labels()) {
        const AlgebraElement e = f4_root_vector(label);
        CHECK(is_sigma_fixed(e));
        // every constituent E6 root folds onto the label
        for (const auto &[k, c] : e.terms()) {
            const auto f = fold(BasisLabel::from_index(k).root());
            std::array<int, 4> expect = label.coeffs;
            for (auto &x : expect)
                x *= label.sign;
            CHECK(f == expect);
            CHECK(c == 1);
        }
    }
}

TEST_CASE("basis of the (-1)-eigenspace")
{
    CHECK(v_basis(12) == E(a(1)) - E(a(6)));
    CHECK(v_basis(13) == H(a(1) - a(6)));
    CHECK(v_basis(14) == H(a(3) - a(5)));
    CHECK(v_basis(15) == E(-a(1)) - E(-a(6)));
    CHECK(v_basis(16) == E(-a(3)) - E(-a(5)));
    for (int i = 1; i <= 26; ++i)
        CHECK(hat_sigma(v_basis(i)) == -v_basis(i));
    CHECK_THROWS_AS(v_basis(0), std::out_of_range);
    CHECK_THROWS_AS(v_basis(27), std::out_of_range);
    CHECK_THROWS_AS(v_coordinates(E(a(1))), std::domain_error);
    const auto c = v_coordinates(2 * v_basis(3) - v_basis(20));
    CHECK(c[2] == 2);
    CHECK(c[19] == -1);
}

TEST_CASE("action on V")
{
    const Matrix m = ad_on_V(f4_root_vector({{1, 0, 0, 0}, 1}));
    for (std::size_t i = 0; i < 26; ++i)
        CHECK(m(i, 5) == (i == 3 ? 1 : 0));
    CHECK(ad_on_V(f4_cartan(4))(0, 0) == 1);
    CHECK_THROWS_AS(ad_on_V(E(a(1))), std::invalid_argument);

    const AlgebraElement g1 = f4_root_vector({{0, 1, 1, 0}, 1});
    const AlgebraElement g2 = f4_root_vector({{0, 0, 1, 1}, -1}) + f4_cartan(2);
    const Matrix x = ad_on_V(g1), y = ad_on_V(g2);
    CHECK(ad_on_V(bracket(g1, g2)) == x * y - y * x);
}

TEST_CASE("eigenspace dimensions and classification")
{
    CHECK(sigma_fixed_dimension() == 52);
    CHECK(sigma_anti_fixed_dimension() == 26);
    const auto cls = classify_positive_roots();
    CHECK(cls.invariant.size() == 12);
    CHECK(cls.representatives.size() == 12);
}

TEST_CASE("Jacobi identity on all basis triples")
{
    CHECK(jacobi_violations() == 0);
}

TEST_CASE("basis labels")
{
    CHECK(BasisLabel::cartan(2).to_string() == "a2");
    CHECK(BasisLabel::root(a(1)).is_cartan() == false);
    CHECK_THROWS_AS(BasisLabel::root(a(1) + a(2)), std::invalid_argument);
    CHECK_THROWS_AS(BasisLabel::from_index(78), std::out_of_range);
}

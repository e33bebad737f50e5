#include <doctest.h>

#include <set>

#include "f4rep/root_lattice.hpp"

using namespace f4rep;

namespace
{

LatticeVector a(int i) { return LatticeVector::simple(i); }

// Norm from the Dynkin edges alone, without the library Gram matrix.
int edge_norm(const std::array<int, 6> &k)
{
    static const int edges[5][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
    int n = 0;
    for (int v : k)
        n += 2 * v * v;
    for (const auto &e : edges)
        n -= 2 * k[e[0] - 1] * k[e[1] - 1];
    return n;
}

} // namespace

TEST_CASE("inner product on simple roots")
{
    CHECK(inner(a(1), a(1)) == 2);
    CHECK(inner(a(1), a(3)) == -1);
    CHECK(inner(a(1), a(2)) == 0);
    CHECK(inner(a(2), a(4)) == -1);
    CHECK(inner(LatticeVector{}, a(5)) == 0);
}

TEST_CASE("root count matches a brute-force scan of a wider box")
{
    std::set<std::array<int, 6>> found;
    std::array<int, 6> k{};
    for (k[0] = -3; k[0] <= 3; ++k[0])
        for (k[1] = -3; k[1] <= 3; ++k[1])
            for (k[2] = -3; k[2] <= 3; ++k[2])
                for (k[3] = -3; k[3] <= 3; ++k[3])
                    for (k[4] = -3; k[4] <= 3; ++k[4])
                        for (k[5] = -3; k[5] <= 3; ++k[5])
                            if (edge_norm(k) == 2)
                                found.insert(k);
    CHECK(found.size() == 72);
    const auto &roots = all_roots();
    REQUIRE(roots.size() == 72);
    std::size_t i = 0;
    for (const auto &r : found)
        CHECK(roots[i++].coords == r);
    CHECK(positive_roots().size() == 36);
}

TEST_CASE("roots contain the simple roots and agree with reflection closure")
{
    for (int i = 1; i <= 6; ++i) {
        CHECK(root_index(a(i)).has_value());
        CHECK(root_index(-a(i)).has_value());
    }
    CHECK_FALSE(root_index(a(1) + a(2)).has_value());
    CHECK(roots_by_reflection_closure() == all_roots());
}

TEST_CASE("sigma swaps the outer nodes")
{
    CHECK(sigma(a(1)) == a(6));
    CHECK(sigma(a(3)) == a(5));
    CHECK(sigma(a(2)) == a(2));
    CHECK(sigma(a(4)) == a(4));
    const LatticeVector v{{1, -2, 3, 0, 2, -1}};
    CHECK(sigma(sigma(v)) == v);
}

TEST_CASE("cocycle values from the exponent formula")
{
    CHECK(cocycle(a(1), a(1)) == -1);
    CHECK(cocycle(a(1), a(3)) == -1);
    CHECK(cocycle(a(3), a(1)) == 1);
    CHECK(cocycle(a(4), a(2)) == -1);
    CHECK(cocycle(a(2), a(4)) == 1);
    CHECK(cocycle(a(1), a(2)) == 1);
}

TEST_CASE("Gram matrix leading minors")
{
    const auto m = gram_leading_minors();
    for (long long v : m)
        CHECK(v > 0);
    CHECK(m[5] == 3);
}

TEST_CASE("reflections preserve the root set")
{
    for (const auto &r : all_roots())
        for (int i = 1; i <= 6; ++i) {
            const auto s = reflect(r, i);
            CHECK(inner(s, s) == 2);
            CHECK(reflect(s, i) == r);
        }
}

#include "f4rep/root_lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace f4rep
{

namespace
{

IntMatrix6 make_gram()
{
    IntMatrix6 g{};
    for (int i = 0; i < kE6Rank; ++i)
        g[i][i] = 2;
    constexpr int edges[5][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
    for (const auto &e : edges) {
        g[e[0] - 1][e[1] - 1] = -1;
        g[e[1] - 1][e[0] - 1] = -1;
    }
    return g;
}

IntMatrix6 make_cocycle_form()
{
    IntMatrix6 c{};
    for (int i = 0; i < kE6Rank; ++i)
        c[i][i] = 1;
    // k1 l3 + k4 l2 + k3 l4 + k5 l4 + k6 l5
    constexpr int cross[5][2] = {{1, 3}, {4, 2}, {3, 4}, {5, 4}, {6, 5}};
    for (const auto &e : cross)
        c[e[0] - 1][e[1] - 1] = 1;
    return c;
}

std::vector<LatticeVector> scan_roots()
{
    // Highest root of E6 is (1,2,2,3,2,1).
    constexpr std::array<int, kE6Rank> bound{1, 2, 2, 3, 2, 1};
    std::vector<LatticeVector> out;
    LatticeVector v;
    auto rec = [&](auto &self, int i) -> void {
        if (i == kE6Rank) {
            if (is_root(v))
                out.push_back(v);
            return;
        }
        for (int k = -bound[i]; k <= bound[i]; ++k) {
            v.coords[i] = k;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

LatticeVector LatticeVector::simple(int i)
{
    if (i < 1 || i > kE6Rank)
        throw std::out_of_range("simple root index must be in 1..6");
    LatticeVector v;
    v.coords[i - 1] = 1;
    return v;
}

bool LatticeVector::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](int k) { return k == 0; });
}

LatticeVector LatticeVector::operator+(const LatticeVector &o) const
{
    LatticeVector r;
    for (int i = 0; i < kE6Rank; ++i)
        r.coords[i] = coords[i] + o.coords[i];
    return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector &o) const { return *this + (-o); }

LatticeVector LatticeVector::operator-() const { return *this * -1; }

LatticeVector LatticeVector::operator*(int s) const
{
    LatticeVector r;
    for (int i = 0; i < kE6Rank; ++i)
        r.coords[i] = s * coords[i];
    return r;
}

std::string LatticeVector::to_string() const
{
    std::string s = "(";
    for (int i = 0; i < kE6Rank; ++i) {
        if (i)
            s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

const IntMatrix6 &gram_e6()
{
    static const IntMatrix6 g = make_gram();
    return g;
}

const IntMatrix6 &cocycle_form()
{
    static const IntMatrix6 c = make_cocycle_form();
    return c;
}

int inner(const LatticeVector &u, const LatticeVector &v)
{
    const auto &g = gram_e6();
    int s = 0;
    for (int i = 0; i < kE6Rank; ++i) {
        if (u.coords[i] == 0)
            continue;
        int row = 0;
        for (int j = 0; j < kE6Rank; ++j)
            row += g[i][j] * v.coords[j];
        s += u.coords[i] * row;
    }
    return s;
}

bool is_root(const LatticeVector &v) { return inner(v, v) == 2; }

bool is_positive(const LatticeVector &v)
{
    for (int k : v.coords)
        if (k != 0)
            return k > 0;
    return false;
}

const std::vector<LatticeVector> &all_roots()
{
    static const std::vector<LatticeVector> roots = scan_roots();
    return roots;
}

std::vector<LatticeVector> positive_roots()
{
    std::vector<LatticeVector> out;
    for (const auto &r : all_roots())
        if (is_positive(r))
            out.push_back(r);
    return out;
}

std::optional<std::size_t> root_index(const LatticeVector &v)
{
    const auto &roots = all_roots();
    auto it = std::lower_bound(roots.begin(), roots.end(), v);
    if (it == roots.end() || *it != v)
        return std::nullopt;
    return static_cast<std::size_t>(it - roots.begin());
}

LatticeVector reflect(const LatticeVector &v, int i)
{
    const LatticeVector a = LatticeVector::simple(i);
    return v - a * inner(v, a);
}

std::vector<LatticeVector> roots_by_reflection_closure()
{
    std::set<LatticeVector> seen;
    std::vector<LatticeVector> frontier;
    for (int i = 1; i <= kE6Rank; ++i) {
        seen.insert(LatticeVector::simple(i));
        frontier.push_back(LatticeVector::simple(i));
    }
    while (!frontier.empty()) {
        std::vector<LatticeVector> next;
        for (const auto &v : frontier)
            for (int i = 1; i <= kE6Rank; ++i) {
                LatticeVector w = reflect(v, i);
                if (seen.insert(w).second)
                    next.push_back(w);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

LatticeVector sigma(const LatticeVector &v)
{
    const auto &k = v.coords;
    return LatticeVector{{k[5], k[1], k[4], k[3], k[2], k[0]}};
}

int cocycle(const LatticeVector &u, const LatticeVector &v)
{
    const auto &c = cocycle_form();
    int s = 0;
    for (int i = 0; i < kE6Rank; ++i)
        for (int j = 0; j < kE6Rank; ++j)
            s += c[i][j] * u.coords[i] * v.coords[j];
    return (s % 2 == 0) ? 1 : -1;
}

std::array<long long, kE6Rank> gram_leading_minors()
{
    // Bareiss elimination; every division is exact.
    std::array<long long, kE6Rank> out{};
    const auto &g = gram_e6();
    for (int n = 1; n <= kE6Rank; ++n) {
        std::array<std::array<long long, kE6Rank>, kE6Rank> a{};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a[i][j] = g[i][j];
        long long prev = 1;
        long long sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (a[k][k] == 0) {
                int p = k + 1;
                while (p < n && a[p][k] == 0)
                    ++p;
                if (p == n) {
                    prev = 0;
                    break;
                }
                std::swap(a[k], a[p]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            prev = a[k][k];
        }
        out[n - 1] = (prev == 0 && n > 1) ? 0 : sign * a[n - 1][n - 1];
    }
    return out;
}

} // namespace f4rep

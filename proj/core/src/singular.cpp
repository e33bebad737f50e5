#include "f4rep/representation.hpp"

#include <map>

namespace f4rep
{

namespace
{

using Column = std::map<Monomial, std::size_t, GrlexOrder>;

std::vector<Rational> coordinates_in(const Polynomial &f, const Column &index)
{
    std::vector<Rational> v(index.size());
    for (const auto &[m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::logic_error("polynomial leaves its weight space");
        v[it->second] = c;
    }
    return v;
}

struct Generators
{
    Polynomial x1, zeta1, theta, eta1, eta2;
};

const Generators &generators()
{
    static const Generators g{Polynomial::variable(1), zeta(1), theta(), eta1(), eta2()};
    return g;
}

} // namespace

std::size_t SingularReport::total() const
{
    std::size_t n = 0;
    for (const auto &e : entries)
        n += e.dim;
    return n;
}

std::vector<std::array<int, 5>> singular_exponents(int k)
{
    std::vector<std::array<int, 5>> out;
    if (k < 0)
        return out;
    for (int m5 = 0; 3 * m5 <= k; ++m5)
        for (int m4 = 0; 3 * m5 + 2 * m4 <= k; ++m4)
            for (int m3 = 0; 3 * m5 + 2 * m4 + 3 * m3 <= k; ++m3)
                for (int m2 = 0; 3 * m5 + 2 * m4 + 3 * m3 + 2 * m2 <= k; ++m2) {
                    int m1 = k - (3 * m5 + 2 * m4 + 3 * m3 + 2 * m2);
                    out.push_back({m1, m2, m3, m4, m5});
                }
    return out;
}

std::size_t predicted_singular_count(int k) { return singular_exponents(k).size(); }

Polynomial singular_product(const std::array<int, 5> &m)
{
    for (int v : m)
        if (v < 0)
            throw std::invalid_argument("exponents must be nonnegative");
    const Generators &g = generators();
    return g.x1.pow(static_cast<unsigned>(m[0])) * g.zeta1.pow(static_cast<unsigned>(m[1])) *
           g.theta.pow(static_cast<unsigned>(m[2])) * g.eta1.pow(static_cast<unsigned>(m[3])) *
           g.eta2.pow(static_cast<unsigned>(m[4]));
}

WeightVector singular_product_weight(const std::array<int, 5> &m) { return {0, 0, m[2], m[0] + m[1]}; }

SingularReport singular_vectors(int k)
{
    if (k < 0)
        throw std::invalid_argument("degree must be nonnegative");
    SingularReport report;
    report.degree = k;
    report.predicted = predicted_singular_count(k);
    report.all_positive_annihilate = true;
    report.products_span = true;

    std::array<const Derivation *, 4> raising{};
    for (int i = 1; i <= 4; ++i)
        raising[i - 1] = &oracle_operator(OperatorLabel::simple(i, 1));

    std::map<WeightVector, std::vector<std::array<int, 5>>> tuples_by_weight;
    for (const auto &m : singular_exponents(k))
        tuples_by_weight[singular_product_weight(m)].push_back(m);

    const auto decomposition = weight_decomposition(k, variable_weights());
    for (auto it = decomposition.rbegin(); it != decomposition.rend(); ++it) {
        const WeightVector &w = it->first;
        if (!is_dominant(w))
            continue;
        const std::vector<Monomial> &basis = it->second;
        Column index;
        for (std::size_t c = 0; c < basis.size(); ++c)
            index.emplace(basis[c], c);

        // Stack the four raising operators; rows are (operator, target monomial).
        std::vector<std::map<Monomial, std::size_t, GrlexOrder>> rows_of(4);
        std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(basis.size());
        std::size_t nrows = 0;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            const Polynomial mono = Polynomial::monomial(basis[c]);
            for (int i = 0; i < 4; ++i) {
                const Polynomial image = raising[i]->apply(mono);
                for (const auto &[m, v] : image.terms()) {
                    auto [r, inserted] = rows_of[i].try_emplace(m, nrows);
                    if (inserted)
                        ++nrows;
                    cols[c].emplace_back(r->second, v);
                }
            }
        }
        Matrix a(nrows, basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (const auto &[r, v] : cols[c])
                a(r, c) += v;

        SingularEntry entry;
        entry.weight = w;
        for (const auto &vec : nullspace(a)) {
            Polynomial f;
            for (std::size_t c = 0; c < basis.size(); ++c)
                if (vec[c] != 0)
                    f.add_term(basis[c], vec[c]);
            entry.basis.push_back(std::move(f));
        }
        entry.dim = entry.basis.size();

        for (const auto &f : entry.basis)
            for (const auto &c : f4_positive_root_coeffs())
                if (!oracle_operator(OperatorLabel::positive(c)).apply(f).is_zero())
                    report.all_positive_annihilate = false;

        // The products of the generators with this weight must form a basis.
        const auto tit = tuples_by_weight.find(w);
        const std::size_t ntuples = tit == tuples_by_weight.end() ? 0 : tit->second.size();
        if (ntuples != entry.dim) {
            report.products_span = false;
        } else if (ntuples > 0) {
            Matrix p(2 * ntuples, basis.size());
            for (std::size_t r = 0; r < ntuples; ++r) {
                const auto pc = coordinates_in(singular_product(tit->second[r]), index);
                const auto kc = coordinates_in(entry.basis[r], index);
                for (std::size_t c = 0; c < basis.size(); ++c) {
                    p(r, c) = pc[c];
                    p(ntuples + r, c) = kc[c];
                }
            }
            Matrix products_only(ntuples, basis.size());
            for (std::size_t r = 0; r < ntuples; ++r)
                for (std::size_t c = 0; c < basis.size(); ++c)
                    products_only(r, c) = p(r, c);
            if (rank(products_only) != ntuples || rank(p) != ntuples)
                report.products_span = false;
        }

        if (entry.dim > 0)
            report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace f4rep

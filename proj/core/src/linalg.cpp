#include "f4rep/linalg.hpp"

#include <stdexcept>

namespace f4rep
{

namespace
{

using IntRow = std::vector<Integer>;

void make_primitive(IntRow &row)
{
    Integer g = 0;
    for (const auto &x : row)
        if (x != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1)
                return;
        }
    if (g > 1)
        for (auto &x : row)
            if (x != 0)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

struct Reduced
{
    std::vector<IntRow> rows;            // nonzero rows only, one per pivot
    std::vector<std::size_t> pivot_cols; // pivot column of each row
};

Reduced reduce(const Matrix &m)
{
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<IntRow> a;
    a.reserve(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        Integer l = 1;
        bool any = false;
        for (std::size_t c = 0; c < nc; ++c)
            if (m(r, c) != 0) {
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
                any = true;
            }
        if (!any)
            continue;
        IntRow row(nc);
        for (std::size_t c = 0; c < nc; ++c)
            if (m(r, c) != 0)
                row[c] = (l / m(r, c).get_den()) * m(r, c).get_num();
        make_primitive(row);
        a.push_back(std::move(row));
    }

    Reduced out;
    std::size_t next = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < nc && next < a.size(); ++c) {
        // Prefer the pivot with the smallest magnitude to limit growth.
        std::size_t best = a.size();
        for (std::size_t r = next; r < a.size(); ++r)
            if (a[r][c] != 0 && (best == a.size() || abs(a[r][c]) < abs(a[best][c])))
                best = r;
        if (best == a.size())
            continue;
        std::swap(a[next], a[best]);
        const IntRow &piv = a[next];
        support.clear();
        for (std::size_t j = 0; j < nc; ++j)
            if (piv[j] != 0)
                support.push_back(j);

        Integer g, fp, fr, t;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == next || a[r][c] == 0)
                continue;
            IntRow &row = a[r];
            mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), row[c].get_mpz_t());
            fr = piv[c] / g; // multiplies the row being cleared
            fp = row[c] / g; // multiplies the pivot row
            if (fr != 1)
                for (auto &x : row)
                    if (x != 0)
                        x *= fr;
            for (std::size_t j : support) {
                t = fp * piv[j];
                row[j] -= t;
            }
            make_primitive(row);
        }
        out.pivot_cols.push_back(c);
        ++next;
    }
    a.resize(next);
    // Rows left over after the last pivot are zero by construction.
    out.rows = std::move(a);
    return out;
}

} // namespace

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto &x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix Matrix::operator+(const Matrix &o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix &o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix &o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational &a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0)
                    r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::scaled(const Rational &s) const
{
    Matrix r(*this);
    for (auto &x : r.data_)
        x *= s;
    return r;
}

std::size_t rank(const Matrix &m) { return reduce(m).pivot_cols.size(); }

std::vector<std::vector<Rational>> nullspace(const Matrix &m)
{
    const Reduced red = reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < red.rows.size(); ++r) {
            const auto &row = red.rows[r];
            if (row[f] != 0)
                v[red.pivot_cols[r]] = Rational(-row[f], row[red.pivot_cols[r]]);
        }
        for (auto &x : v)
            x.canonicalize();
        // Clear denominators and normalize to a primitive integer vector.
        Integer l = 1;
        for (const auto &x : v)
            if (x != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        IntRow iv(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                iv[i] = (l / v[i].get_den()) * v[i].get_num();
        make_primitive(iv);
        for (const auto &x : iv)
            if (x != 0) {
                if (x < 0)
                    for (auto &y : iv)
                        y = -y;
                break;
            }
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = Rational(iv[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace f4rep

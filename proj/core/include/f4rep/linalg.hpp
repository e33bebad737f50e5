#ifndef F4REP_LINALG_HPP
#define F4REP_LINALG_HPP

#include <cstddef>
#include <vector>

#include "f4rep/rational.hpp"

namespace f4rep
{

/// Dense row-major matrix over the rationals.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;

    Matrix operator+(const Matrix &other) const;
    Matrix operator-(const Matrix &other) const;
    Matrix operator*(const Matrix &other) const;
    Matrix scaled(const Rational &s) const;

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank over Q. Rows are cleared to integers and reduced by fraction-free
/// Gauss-Jordan elimination, dividing each updated row by its content.
std::size_t rank(const Matrix &m);

/// Basis of {v : m v = 0}. Each vector is primitive integral (coprime
/// entries, first nonzero entry positive) and is indexed by the free
/// columns of the reduced form, in increasing order.
std::vector<std::vector<Rational>> nullspace(const Matrix &m);

} // namespace f4rep

#endif

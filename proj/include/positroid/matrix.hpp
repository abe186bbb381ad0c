#pragma once

#include "positroid/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace positroid {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    std::vector<Rational> column(std::size_t c) const;
    const std::vector<Rational>& entries() const { return data_; }

    // Columns/rows given by 0-based indices, in the order listed.
    RatMatrix select_columns(std::span<const int> cols) const;
    RatMatrix select_rows(std::span<const int> rows) const;
    RatMatrix transpose() const;
    RatMatrix stack_below(const RatMatrix& other) const;

    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> operator*(const std::vector<Rational>& row, const RatMatrix& m);

// Fraction-free (Bareiss) elimination on the integer-scaled rows.
Rational det(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Reduced row echelon form; pivot columns appended to *pivots when given.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

// Rows form a basis of {x : M x = 0}.
RatMatrix kernel_basis(const RatMatrix& m);

// Nonzero rows of rref(m).
RatMatrix row_space_basis(const RatMatrix& m);

// Solve M x = b for square invertible M.
std::vector<Rational> solve(const RatMatrix& m, const std::vector<Rational>& b);

RatMatrix inverse(const RatMatrix& m);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace positroid

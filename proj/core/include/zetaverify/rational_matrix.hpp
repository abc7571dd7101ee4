#pragma once

#include <cstddef>
#include <vector>

#include "zetaverify/rational.hpp"

namespace zv {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigRational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigRational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_upper_triangular() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigRational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix, with row pivoting. Works for any
/// square input; triangularity is never assumed. Throws NotSquare.
BigRational determinant(const RationalMatrix& m);

} // namespace zv

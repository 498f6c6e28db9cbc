#pragma once

#include "bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace torusemb {

// Dense exact integer matrix, row major. Degenerate shapes (zero rows or
// columns) are legal values; they show up as genus-0 homology bases.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix from_columns(const std::vector<std::vector<Int>>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    std::vector<Int> row_vector(std::size_t r) const;
    std::vector<Int> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<Int>& v);

    // Copy with the given column indices, in order.
    IntMatrix select_columns(const std::vector<std::size_t>& idx) const;

    // Elementary operations used by the normal-form routines.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);  // row dst += q * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);  // col dst += q * col src

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// A * v for a column vector v of length cols().
std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& v);

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace torusemb

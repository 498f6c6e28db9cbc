#include "intmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace torusemb {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
    IntMatrix m(nr, nc);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) throw std::invalid_argument("ragged row list");
        std::size_t c = 0;
        for (long v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& columns, std::size_t rows) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

std::vector<Int> IntMatrix::row_vector(std::size_t r) const {
    std::vector<Int> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
    return out;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
    std::vector<Int> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void IntMatrix::set_column(std::size_t c, const std::vector<Int>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
        for (std::size_t r = 0; r < rows_; ++r) out(r, c) = (*this)(r, idx[c]);
    return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
}

std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Int> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != 0) out[r] += a(r, c) * v[c];
    return out;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace torusemb

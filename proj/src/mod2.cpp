#include "mod2.hpp"

#include <stdexcept>

namespace torusemb {

Mod2Matrix::Mod2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mod2Matrix Mod2Matrix::identity(std::size_t n) {
    Mod2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mod2Matrix Mod2Matrix::reduction_of(const IntMatrix& a) {
    Mod2Matrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m(r, c) = static_cast<Bit>(mpz_odd_p(a(r, c).get_mpz_t()) ? 1 : 0);
    return m;
}

Mod2Matrix Mod2Matrix::transposed() const {
    Mod2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Mod2Matrix Mod2Matrix::operator*(const Mod2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mod2Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (!(*this)(r, k)) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) ^= rhs(k, c);
        }
    return out;
}

namespace {

// Row reduction of [a | rhs]; returns pivot column per reduced row.
struct Elimination {
    Mod2Matrix a;
    std::vector<Bit> rhs;
    std::vector<std::size_t> pivot_cols;
    std::size_t pivot_rows = 0;
};

Elimination eliminate(const Mod2Matrix& a_in, const std::vector<Bit>* b) {
    Elimination e{a_in, b ? *b : std::vector<Bit>(a_in.rows(), 0), {}, 0};
    const std::size_t m = e.a.rows(), n = e.a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pr = row;
        while (pr < m && !e.a(pr, col)) ++pr;
        if (pr == m) continue;
        if (pr != row) {
            for (std::size_t c = 0; c < n; ++c) std::swap(e.a(row, c), e.a(pr, c));
            std::swap(e.rhs[row], e.rhs[pr]);
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || !e.a(r, col)) continue;
            for (std::size_t c = 0; c < n; ++c) e.a(r, c) ^= e.a(row, c);
            e.rhs[r] ^= e.rhs[row];
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.pivot_rows = row;
    return e;
}

}  // namespace

std::size_t Mod2Matrix::rank() const { return eliminate(*this, nullptr).pivot_rows; }

std::optional<Mod2Matrix> Mod2Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mod2Matrix a = *this;
    Mod2Matrix inv = identity(rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pr = col;
        while (pr < rows_ && !a(pr, col)) ++pr;
        if (pr == rows_) return std::nullopt;
        if (pr != col)
            for (std::size_t c = 0; c < cols_; ++c) {
                std::swap(a(col, c), a(pr, c));
                std::swap(inv(col, c), inv(pr, c));
            }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == col || !a(r, col)) continue;
            for (std::size_t c = 0; c < cols_; ++c) {
                a(r, c) ^= a(col, c);
                inv(r, c) ^= inv(col, c);
            }
        }
    }
    return inv;
}

std::optional<std::vector<Bit>> solve_mod2(const Mod2Matrix& a, const std::vector<Bit>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    Elimination e = eliminate(a, &b);
    for (std::size_t r = e.pivot_rows; r < a.rows(); ++r)
        if (e.rhs[r]) return std::nullopt;
    std::vector<Bit> x(a.cols(), 0);
    for (std::size_t i = 0; i < e.pivot_rows; ++i) x[e.pivot_cols[i]] = e.rhs[i];
    return x;
}

std::vector<Bit> mod2_mat_vec(const Mod2Matrix& a, const std::vector<Bit>& v) {
    if (v.size() != a.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Bit> out(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) && v[c]) out[r] ^= 1;
    return out;
}

}  // namespace torusemb

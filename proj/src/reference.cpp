#include "reference.hpp"

#include <stdexcept>

namespace torusemb::reference {

namespace {

void minors_rec(const IntMatrix& a, std::size_t k, std::vector<std::size_t>& rows,
                std::vector<std::size_t>& cols, std::size_t row_from, std::size_t col_from,
                bool picking_rows, Int& g) {
    if (picking_rows) {
        if (rows.size() == k) {
            minors_rec(a, k, rows, cols, 0, 0, false, g);
            return;
        }
        for (std::size_t r = row_from; r < a.rows(); ++r) {
            rows.push_back(r);
            minors_rec(a, k, rows, cols, r + 1, 0, true, g);
            rows.pop_back();
        }
        return;
    }
    if (cols.size() == k) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
        g = gcd_int(g, bareiss_det(sub));
        return;
    }
    for (std::size_t c = col_from; c < a.cols(); ++c) {
        cols.push_back(c);
        minors_rec(a, k, rows, cols, 0, c + 1, false, g);
        cols.pop_back();
    }
}

Int minor_gcd(const IntMatrix& a, std::size_t k) {
    Int g = 0;
    std::vector<std::size_t> rows, cols;
    minors_rec(a, k, rows, cols, 0, 0, true, g);
    return g;
}

}  // namespace

std::vector<Int> minor_gcd_invariant_factors(const IntMatrix& a) {
    std::vector<Int> factors;
    Int prev = 1;
    const std::size_t kmax = std::min(a.rows(), a.cols());
    for (std::size_t k = 1; k <= kmax; ++k) {
        Int dk = minor_gcd(a, k);
        if (dk == 0) break;
        factors.push_back(dk / prev);
        prev = dk;
    }
    return factors;
}

Int bareiss_det(IntMatrix a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t elimination_rank(IntMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pr = rank;
        while (pr < m && a(pr, col) == 0) ++pr;
        if (pr == m) continue;
        a.swap_rows(rank, pr);
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (a(i, col) == 0) continue;
            Int piv = a(rank, col), lead = a(i, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) = a(i, j) * piv - lead * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<mpq_class>> solve_rational(const IntMatrix& a,
                                                     const std::vector<Int>& rhs) {
    if (rhs.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<mpq_class>> w(m, std::vector<mpq_class>(n + 1));
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) w[r][c] = mpq_class(a(r, c));
        w[r][n] = mpq_class(rhs[r]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pr = row;
        while (pr < m && w[pr][col] == 0) ++pr;
        if (pr == m) continue;
        std::swap(w[row], w[pr]);
        mpq_class piv = w[row][col];
        for (std::size_t c = col; c <= n; ++c) w[row][c] /= piv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || w[r][col] == 0) continue;
            mpq_class lead = w[r][col];
            for (std::size_t c = col; c <= n; ++c) w[r][c] -= lead * w[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (w[r][n] != 0) return std::nullopt;
    std::vector<mpq_class> x(n, mpq_class(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = w[i][n];
    return x;
}

bool in_column_span(const IntMatrix& b, const std::vector<Int>& w) {
    auto x = solve_rational(b, w);
    if (!x) return false;
    for (const mpq_class& q : *x)
        if (q.get_den() != 1) return false;
    return true;
}

std::vector<std::vector<Int>> small_kernel_vectors(const IntMatrix& a, long bound) {
    std::vector<std::vector<Int>> out;
    const std::size_t n = a.cols();
    std::vector<Int> x(n, -bound);
    if (n == 0) return out;
    for (;;) {
        bool zero = true;
        std::vector<Int> ax = mat_vec(a, x);
        for (const Int& v : ax)
            if (v != 0) zero = false;
        if (zero) out.push_back(x);
        std::size_t i = 0;
        while (i < n && x[i] == bound) x[i++] = -bound;
        if (i == n) break;
        x[i] += 1;
    }
    return out;
}

std::array<Int, 3> omega_wedge_sum(const IntMatrix& m) {
    if (m.cols() % 2 != 0) throw std::invalid_argument("wedge sum needs paired columns");
    std::array<Int, 3> total{0, 0, 0};
    for (std::size_t p = 0; p + 1 < m.cols(); p += 2) {
        std::array<Int, 3> w = wedge(m.column(p), m.column(p + 1));
        for (int i = 0; i < 3; ++i) total[i] += w[i];
    }
    return total;
}

std::array<Bit, 3> omega_mod2_crosscap(const IntMatrix& crosscap_matrix) {
    auto dot_mod2 = [&](std::size_t i, std::size_t j) {
        Bit s = 0;
        for (std::size_t c = 0; c < crosscap_matrix.cols(); ++c)
            if (mpz_odd_p(crosscap_matrix(i, c).get_mpz_t()) &&
                mpz_odd_p(crosscap_matrix(j, c).get_mpz_t()))
                s ^= 1;
        return s;
    };
    return {dot_mod2(0, 1), dot_mod2(1, 2), dot_mod2(0, 2)};
}

Int pfaffian(const IntMatrix& g) {
    if (!is_skew_symmetric(g)) throw std::invalid_argument("pfaffian of a non-skew matrix");
    const std::size_t n = g.rows();
    if (n % 2 != 0) return 0;
    if (n == 0) return 1;
    Int total = 0;
    for (std::size_t j = 1; j < n; ++j) {
        if (g(0, j) == 0) continue;
        std::vector<std::size_t> keep;
        for (std::size_t c = 1; c < n; ++c)
            if (c != j) keep.push_back(c);
        IntMatrix sub(n - 2, n - 2);
        for (std::size_t r = 0; r < keep.size(); ++r)
            for (std::size_t c = 0; c < keep.size(); ++c) sub(r, c) = g(keep[r], keep[c]);
        Int term = g(0, j) * pfaffian(sub);
        if (j % 2 == 0) term = -term;
        total += term;
    }
    return total;
}

}  // namespace torusemb::reference

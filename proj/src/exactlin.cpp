#include "exactlin.hpp"

#include <stdexcept>

namespace torusemb {

namespace {

// Pivot choice for the normal forms: smallest nonzero absolute value in the
// remaining block, ties broken by lowest (row, col).
struct Pivot {
    bool found = false;
    std::size_t row = 0;
    std::size_t col = 0;
};

Pivot find_pivot(const IntMatrix& m, std::size_t r0, std::size_t c0) {
    Pivot p;
    Int best;
    for (std::size_t i = r0; i < m.rows(); ++i)
        for (std::size_t j = c0; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs_int(m(i, j));
            if (!p.found || a < best) {
                p.found = true;
                p.row = i;
                p.col = j;
                best = a;
            }
        }
    return p;
}

}  // namespace

SmithDecomposition snf(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithDecomposition out;
    out.d = a;
    out.u = IntMatrix::identity(m);
    out.v = IntMatrix::identity(n);
    IntMatrix& d = out.d;

    std::size_t k = 0;
    const std::size_t steps = std::min(m, n);
    while (k < steps) {
        Pivot p = find_pivot(d, k, k);
        if (!p.found) break;
        d.swap_rows(k, p.row);
        out.u.swap_rows(k, p.row);
        d.swap_cols(k, p.col);
        out.v.swap_cols(k, p.col);

        bool dirty = false;
        for (std::size_t i = k + 1; i < m; ++i) {
            if (d(i, k) == 0) continue;
            Int q = trunc_div(d(i, k), d(k, k));
            d.add_row_multiple(i, k, -q);
            out.u.add_row_multiple(i, k, -q);
            if (d(i, k) != 0) dirty = true;
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (d(k, j) == 0) continue;
            Int q = trunc_div(d(k, j), d(k, k));
            d.add_col_multiple(j, k, -q);
            out.v.add_col_multiple(j, k, -q);
            if (d(k, j) != 0) dirty = true;
        }
        if (dirty) continue;  // a remainder smaller than the pivot appeared

        // Pivot must divide the remaining block for the divisibility chain;
        // folding an offending row into row k shrinks the future pivot.
        bool divides = true;
        for (std::size_t i = k + 1; i < m && divides; ++i)
            for (std::size_t j = k + 1; j < n && divides; ++j)
                if (d(i, j) % d(k, k) != 0) {
                    d.add_row_multiple(k, i, 1);
                    out.u.add_row_multiple(k, i, 1);
                    divides = false;
                }
        if (!divides) continue;

        if (d(k, k) < 0) {
            d.negate_row(k);
            out.u.negate_row(k);
        }
        ++k;
    }

    for (std::size_t i = 0; i < k; ++i) out.invariant_factors.push_back(d(i, i));
    return out;
}

std::size_t rank(const IntMatrix& a) { return snf(a).invariant_factors.size(); }

IntMatrix hermite_columns(IntMatrix b) {
    const std::size_t n = b.rows(), k = b.cols();
    std::size_t next = 0;
    for (std::size_t r = 0; r < n && next < k; ++r) {
        // Gather the row-r gcd into column `next` by euclidean column ops.
        bool any = false;
        for (std::size_t j = next; j < k; ++j)
            if (b(r, j) != 0) any = true;
        if (!any) continue;
        for (;;) {
            std::size_t jmin = next;
            bool found = false;
            Int best;
            for (std::size_t j = next; j < k; ++j) {
                if (b(r, j) == 0) continue;
                Int a = abs_int(b(r, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    jmin = j;
                }
            }
            b.swap_cols(next, jmin);
            bool done = true;
            for (std::size_t j = next + 1; j < k; ++j) {
                if (b(r, j) == 0) continue;
                Int q = trunc_div(b(r, j), b(r, next));
                b.add_col_multiple(j, next, -q);
                if (b(r, j) != 0) done = false;
            }
            if (done) break;
        }
        if (b(r, next) < 0) b.negate_col(next);
        for (std::size_t j = 0; j < next; ++j) {
            Int q = floor_div(b(r, j), b(r, next));
            b.add_col_multiple(j, next, -q);
        }
        ++next;
    }
    return b;
}

std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a) {
    SmithDecomposition s = snf(a);
    const std::size_t r = s.invariant_factors.size();
    const std::size_t n = a.cols();
    if (r == n) return {};
    std::vector<std::size_t> idx;
    for (std::size_t j = r; j < n; ++j) idx.push_back(j);
    IntMatrix canon = hermite_columns(s.v.select_columns(idx));
    std::vector<std::vector<Int>> out;
    out.reserve(canon.cols());
    for (std::size_t j = 0; j < canon.cols(); ++j) out.push_back(canon.column(j));
    return out;
}

Int gcd_vector(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

bool is_primitive(const std::vector<Int>& v) { return gcd_vector(v) == 1; }

Int abs_det(const IntMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    SmithDecomposition s = snf(a);
    if (s.invariant_factors.size() < a.rows()) return 0;
    Int p = 1;
    for (const Int& f : s.invariant_factors) p *= f;
    return p;
}

bool is_skew_symmetric(const IntMatrix& g) {
    if (!g.is_square()) return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.cols(); ++j)
            if (g(i, j) != -g(j, i)) return false;
    return true;
}

SkewForm::SkewForm(IntMatrix gram) : gram_(std::move(gram)) {
    if (!is_skew_symmetric(gram_)) throw std::invalid_argument("form matrix is not skew-symmetric");
}

SkewForm SkewForm::standard_symplectic(std::size_t genus) {
    IntMatrix g(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        g(2 * i, 2 * i + 1) = 1;
        g(2 * i + 1, 2 * i) = -1;
    }
    return SkewForm(std::move(g));
}

SkewForm SkewForm::symplectic_with_radical(std::size_t genus) {
    IntMatrix g(2 * genus + 1, 2 * genus + 1);
    for (std::size_t i = 0; i < genus; ++i) {
        g(2 * i, 2 * i + 1) = 1;
        g(2 * i + 1, 2 * i) = -1;
    }
    return SkewForm(std::move(g));
}

Int SkewForm::pair(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != dimension() || y.size() != dimension())
        throw std::invalid_argument("vector length does not match form dimension");
    return dot(x, mat_vec(gram_, y));
}

IntMatrix skew_gram(const SkewForm& form, const std::vector<std::vector<Int>>& vectors) {
    const std::size_t k = vectors.size();
    for (const auto& v : vectors)
        if (v.size() != form.dimension())
            throw std::invalid_argument("vector length does not match form dimension");
    IntMatrix g(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int> bv = mat_vec(form.gram(), vectors[i]);
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            g(j, i) = dot(vectors[j], bv);
        }
    }
    return g;
}

bool SkewNormalForm::unimodular() const {
    if (2 * blocks.size() != dimension) return false;
    for (const Int& d : blocks)
        if (d != 1) return false;
    return true;
}

namespace {

// Simultaneous row+column operations keep w congruent to the input
// (w = t^T * g * t throughout).
struct Congruence {
    IntMatrix& w;
    IntMatrix& t;

    void swap(std::size_t i, std::size_t j) {
        w.swap_rows(i, j);
        w.swap_cols(i, j);
        t.swap_cols(i, j);
    }
    void negate(std::size_t i) {
        w.negate_row(i);
        w.negate_col(i);
        t.negate_col(i);
    }
    void add_multiple(std::size_t dst, std::size_t src, const Int& q) {
        w.add_row_multiple(dst, src, q);
        w.add_col_multiple(dst, src, q);
        t.add_col_multiple(dst, src, q);
    }
};

struct UpperPivot {
    bool found = false;
    std::size_t row = 0, col = 0;
};

UpperPivot find_upper_pivot(const IntMatrix& w, std::size_t k) {
    UpperPivot p;
    Int best;
    for (std::size_t i = k; i < w.rows(); ++i)
        for (std::size_t j = i + 1; j < w.cols(); ++j) {
            if (w(i, j) == 0) continue;
            Int a = abs_int(w(i, j));
            if (!p.found || a < best) {
                p.found = true;
                p.row = i;
                p.col = j;
                best = a;
            }
        }
    return p;
}

}  // namespace

SkewNormalForm skew_normal_form(const IntMatrix& g) {
    if (!is_skew_symmetric(g)) throw std::invalid_argument("matrix is not skew-symmetric");
    const std::size_t n = g.rows();
    SkewNormalForm out;
    out.dimension = n;
    out.transform = IntMatrix::identity(n);
    IntMatrix w = g;
    Congruence ops{w, out.transform};

    std::size_t k = 0;
    while (k + 1 < n) {
        UpperPivot p = find_upper_pivot(w, k);
        if (!p.found) break;
        // Move the pivot entry to (k, k+1).
        ops.swap(p.row, k);
        std::size_t c = (p.col == k) ? p.row : p.col;
        ops.swap(c, k + 1);
        if (w(k, k + 1) < 0) ops.negate(k);
        const Int pval = w(k, k + 1);

        bool dirty = false;
        for (std::size_t r = k + 2; r < n; ++r) {
            if (w(k + 1, r) != 0) {
                Int q = trunc_div(w(k + 1, r), pval);
                ops.add_multiple(r, k, q);  // <e_{k+1}, e_r + q e_k> = w(k+1,r) - q p
                if (w(k + 1, r) != 0) dirty = true;
            }
            if (w(k, r) != 0) {
                Int q = trunc_div(w(k, r), pval);
                ops.add_multiple(r, k + 1, -q);  // <e_k, e_r - q e_{k+1}> = w(k,r) - q p
                if (w(k, r) != 0) dirty = true;
            }
        }
        if (dirty) continue;

        bool divides = true;
        for (std::size_t i = k + 2; i < n && divides; ++i)
            for (std::size_t j = i + 1; j < n && divides; ++j)
                if (w(i, j) % pval != 0) {
                    ops.add_multiple(k, i, 1);
                    divides = false;
                }
        if (!divides) continue;

        out.blocks.push_back(pval);
        k += 2;
    }
    return out;
}

namespace {

IntMatrix basis_matrix(const std::vector<std::vector<Int>>& vectors, std::size_t rows) {
    return IntMatrix::from_columns(vectors, rows);
}

}  // namespace

std::vector<std::vector<Int>> complete_pair_to_symplectic(const std::vector<Int>& v,
                                                          const std::vector<Int>& u,
                                                          const SkewForm& j) {
    const std::size_t n = j.dimension();
    if (abs_det(j.gram()) != 1) throw std::invalid_argument("form is not unimodular");
    if (v.size() != n || u.size() != n)
        throw std::invalid_argument("vector length does not match form dimension");
    if (j.pair(v, u) != 1) throw std::invalid_argument("pair does not have pairing 1");

    std::vector<std::vector<Int>> basis{v, u};
    if (n == 2) return basis;

    // The orthogonal complement of the hyperbolic plane <v, u>.
    IntMatrix rows(2, n);
    std::vector<Int> vj = mat_vec(j.gram().transposed(), v);  // row v^T J
    std::vector<Int> uj = mat_vec(j.gram().transposed(), u);
    for (std::size_t c = 0; c < n; ++c) {
        rows(0, c) = vj[c];
        rows(1, c) = uj[c];
    }
    std::vector<std::vector<Int>> comp = kernel_basis(rows);
    if (comp.size() != n - 2) throw std::logic_error("hyperbolic complement has wrong rank");

    IntMatrix kmat = basis_matrix(comp, n);
    SkewForm restricted{skew_gram(j, comp)};
    SkewNormalForm nf = skew_normal_form(restricted.gram());
    if (!nf.unimodular()) throw std::logic_error("complement of a hyperbolic plane is not unimodular");

    IntMatrix sympl = kmat * nf.transform;
    for (std::size_t c = 0; c < sympl.cols(); ++c) basis.push_back(sympl.column(c));
    return basis;
}

std::vector<std::vector<Int>> complete_to_symplectic(const std::vector<Int>& v, const SkewForm& j) {
    const std::size_t n = j.dimension();
    if (v.size() != n) throw std::invalid_argument("vector length does not match form dimension");
    if (!is_primitive(v)) throw std::invalid_argument("vector is not primitive");
    if (abs_det(j.gram()) != 1) throw std::invalid_argument("form is not unimodular");

    // Solve <v, u> = 1. The row v^T J is primitive, so the SNF of the 1 x n
    // matrix has invariant factor 1 and the first column of V hits +-1.
    std::vector<Int> vj = mat_vec(j.gram().transposed(), v);
    IntMatrix row(1, n);
    for (std::size_t c = 0; c < n; ++c) row(0, c) = vj[c];
    SmithDecomposition s = snf(row);
    if (s.invariant_factors.size() != 1 || s.invariant_factors[0] != 1)
        throw std::logic_error("primitive vector with unimodular form must pair onto 1");
    std::vector<Int> u = s.v.column(0);
    Int got = dot(vj, u);
    if (got == -1)
        for (Int& x : u) x = -x;
    return complete_pair_to_symplectic(v, u, j);
}

}  // namespace torusemb

#include "witness.hpp"

#include <stdexcept>

namespace torusemb {

namespace {

std::array<Int, 3> column3(const IntMatrix& m, std::size_t c) {
    return {m(0, c), m(1, c), m(2, c)};
}

std::vector<Int> unit_vector(std::size_t n, std::size_t i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    return e;
}

std::optional<IntMatrix> inverse_unimodular(const IntMatrix& b) {
    if (!b.is_square()) return std::nullopt;
    SmithDecomposition s = snf(b);
    if (s.invariant_factors.size() != b.rows()) return std::nullopt;
    for (const Int& f : s.invariant_factors)
        if (f != 1) return std::nullopt;
    return s.v * s.u;  // u b v = 1  =>  b^{-1} = v u
}

}  // namespace

OrientableReduction reduce_orientable(const TorusMap& f) {
    if (f.surface().kind() != SurfaceKind::Orientable || f.surface().genus() < 1)
        throw std::domain_error("reduction requires an orientable surface of genus >= 1");

    std::vector<ReductionStep> trace;
    IntMatrix m = f.matrix();
    long g = f.surface().genus();
    while (g > 0) {
        auto kb = kernel_basis(m);
        if (kb.empty()) break;  // injective map of the torus; only reachable at g = 1
        std::vector<Int> v = kb.front();
        Int gv = gcd_vector(v);
        if (gv > 1)
            for (Int& x : v) x /= gv;  // saturated kernels give primitive vectors already

        SkewForm j = SkewForm::standard_symplectic(static_cast<std::size_t>(g));
        auto basis = complete_to_symplectic(v, j);  // (v, u, rest...)
        std::vector<std::vector<Int>> cols(basis.begin() + 2, basis.end());
        cols.push_back(basis[0]);
        cols.push_back(basis[1]);
        IntMatrix b = IntMatrix::from_columns(cols, static_cast<std::size_t>(2 * g));
        IntMatrix nm = m * b;

        const std::size_t last = static_cast<std::size_t>(2 * g - 1);
        trace.push_back({v, basis[1], column3(nm, last), b});

        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c + 2 < nm.cols(); ++c) keep.push_back(c);
        m = nm.select_columns(keep);
        --g;
    }
    return {std::move(trace), TorusMap(SurfaceModel::orientable(g), m)};
}

namespace {

struct NonorientableReduction {
    std::vector<ReductionStep> trace;
    std::vector<HandlePair> pairs;
    IntMatrix terminal;  // 3x3 matrix of the genus-4 base map
};

// Surgers away hyperbolic pairs of the kernel pairing until genus 4. Only
// called on maps with all five conditions verified, so the pairing is
// unimodular and every kernel class has an even crosstube coefficient.
NonorientableReduction reduce_nonorientable(const TorusMap& f) {
    IntMatrix m = f.matrix();
    long h = f.surface().genus();
    NonorientableReduction red;
    while (h > 4) {
        SurfaceModel cur = SurfaceModel::nonorientable(h);
        TorusMap fm(cur, m);
        KernelData kd = kernel_data(fm);
        SkewNormalForm nf = skew_normal_form(kd.gram);
        if (nf.blocks.empty() || nf.blocks.front() != 1)
            throw std::logic_error("unimodular kernel pairing must contain a hyperbolic pair");

        const std::size_t fr = cur.free_rank();
        const std::size_t g = cur.handle_pairs();
        std::vector<Int> alpha(fr, 0), beta(fr, 0);
        for (std::size_t i = 0; i < kd.basis.size(); ++i) {
            if (nf.transform(i, 0) != 0)
                for (std::size_t c = 0; c < fr; ++c) alpha[c] += nf.transform(i, 0) * kd.basis[i][c];
            if (nf.transform(i, 1) != 0)
                for (std::size_t c = 0; c < fr; ++c) beta[c] += nf.transform(i, 1) * kd.basis[i][c];
        }
        if (alpha[fr - 1] % 2 != 0 || beta[fr - 1] % 2 != 0)
            throw std::logic_error("kernel classes must have even crosstube coefficient");

        std::vector<Int> abar(alpha.begin(), alpha.end() - 1);
        std::vector<Int> bbar(beta.begin(), beta.end() - 1);
        SkewForm j = SkewForm::standard_symplectic(g);
        auto ab = complete_pair_to_symplectic(abar, bbar, j);  // (abar, bbar, rest...)

        // New basis: retained pairs first, the surgered pair, then m. The
        // pair keeps its even m parts; that preserves w1 and both forms.
        std::vector<std::vector<Int>> cols;
        for (std::size_t i = 2; i < ab.size(); ++i) {
            std::vector<Int> lifted = ab[i];
            lifted.push_back(0);
            cols.push_back(std::move(lifted));
        }
        cols.push_back(alpha);
        cols.push_back(beta);
        cols.push_back(unit_vector(fr, fr - 1));
        IntMatrix b = IntMatrix::from_columns(cols, fr);
        IntMatrix nm = m * b;

        red.trace.push_back({alpha, beta, column3(nm, fr - 2), b});
        red.pairs.push_back({alpha, beta});

        std::vector<std::size_t> keep;
        for (std::size_t c = 0; c + 3 < fr; ++c) keep.push_back(c);
        keep.push_back(fr - 1);  // m stays
        m = nm.select_columns(keep);
        h -= 2;
    }
    red.terminal = m;
    return red;
}

}  // namespace

WitnessOutcome build_witness(const TorusMap& f) {
    Verdict v = decide(f);
    if (!v.embeddable) return {std::move(v), std::nullopt};

    EmbeddingWitness w;
    if (f.surface().kind() == SurfaceKind::Orientable) {
        if (f.surface().genus() == 0) {
            w.shape = SphereWithTubes{};
            return {std::move(v), std::move(w)};
        }
        OrientableReduction red = reduce_orientable(f);
        w.trace = red.trace;
        if (v.evidence.omega->is_zero()) {
            SphereWithTubes shape;
            for (const auto& step : red.trace) shape.arc_classes.push_back(step.arc_class);
            w.shape = std::move(shape);
        } else {
            TorusWithHandles shape;
            shape.torus_image = {column3(red.terminal.matrix(), 0), column3(red.terminal.matrix(), 1)};
            for (const auto& step : red.trace) shape.arc_classes.push_back(step.arc_class);
            w.shape = std::move(shape);
        }
    } else {
        NonorientableReduction red = reduce_nonorientable(f);
        NonorientableStandard shape;
        shape.torus_image = {column3(red.terminal, 0), column3(red.terminal, 1)};
        shape.cross_tube_class = column3(red.terminal, 2);
        shape.handle_pairs = red.pairs;
        w.shape = std::move(shape);
        w.trace = red.trace;
    }
    return {std::move(v), std::move(w)};
}

namespace {

bool vector_is_zero(const std::vector<Int>& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

bool primitive3(const std::array<Int, 3>& v) { return gcd_vector({v[0], v[1], v[2]}) == 1; }

IntMatrix matrix_from_columns3(const std::vector<std::array<Int, 3>>& cols) {
    IntMatrix m(3, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < 3; ++r) m(r, c) = cols[c][r];
    return m;
}

// Structure checks for one replayed step at free rank n (orientable: n = 2g;
// nonorientable: n = 2g+1 with m last).
bool check_step(const ReductionStep& step, const IntMatrix& level_matrix, bool orientable) {
    const std::size_t n = level_matrix.cols();
    const IntMatrix& b = step.basis_change;
    if (b.rows() != n || b.cols() != n) return false;
    if (step.kernel_vector.size() != n || step.partner_vector.size() != n) return false;

    if (!is_primitive(step.kernel_vector)) return false;
    if (!vector_is_zero(mat_vec(level_matrix, step.kernel_vector))) return false;

    SkewForm form = orientable ? SkewForm::standard_symplectic(n / 2)
                               : SkewForm::symplectic_with_radical((n - 1) / 2);
    if (form.pair(step.kernel_vector, step.partner_vector) != 1) return false;

    // The surgered pair must sit in the recorded basis change where the
    // reduction put it, and the basis change must preserve the structure.
    const std::size_t pair_at = orientable ? n - 2 : n - 3;
    if (b.column(pair_at) != step.kernel_vector) return false;
    if (b.column(pair_at + 1) != step.partner_vector) return false;
    if (!orientable && b.column(n - 1) != unit_vector(n, n - 1)) return false;

    if (!inverse_unimodular(b)) return false;
    if (!(b.transposed() * form.gram() * b == form.gram())) return false;
    if (!orientable) {
        // Mod-2 form on the free basis: symplectic pairs plus m with self
        // intersection 1. Conjugation invariance covers w1 as well, since
        // the diagonal of this form is w1 restricted to the free basis.
        Mod2Matrix qfree(n, n);
        for (std::size_t i = 0; i + 1 < n; i += 2) {
            qfree(i, i + 1) = 1;
            qfree(i + 1, i) = 1;
        }
        qfree(n - 1, n - 1) = 1;
        Mod2Matrix b2 = Mod2Matrix::reduction_of(b);
        if (!(b2.transposed() * qfree * b2 == qfree)) return false;
    }
    return true;
}

}  // namespace

bool verify_witness(const EmbeddingWitness& w, const TorusMap& f) {
    const SurfaceModel& s = f.surface();
    const bool orientable = s.kind() == SurfaceKind::Orientable;
    const long genus = s.genus();

    // Shape/count validation; a witness that cannot belong to this surface
    // at all is malformed rather than merely wrong.
    IntMatrix level;  // terminal matrix of the replay
    if (const auto* sphere = std::get_if<SphereWithTubes>(&w.shape)) {
        if (!orientable) throw std::invalid_argument("sphere witness for a nonorientable surface");
        if (sphere->arc_classes.size() != static_cast<std::size_t>(genus) ||
            w.trace.size() != static_cast<std::size_t>(genus))
            throw std::invalid_argument("sphere witness must carry one tube per handle");
        level = IntMatrix(3, 0);
    } else if (const auto* torus = std::get_if<TorusWithHandles>(&w.shape)) {
        if (!orientable) throw std::invalid_argument("torus witness for a nonorientable surface");
        if (genus < 1 || torus->arc_classes.size() != static_cast<std::size_t>(genus - 1) ||
            w.trace.size() != static_cast<std::size_t>(genus - 1))
            throw std::invalid_argument("torus witness must carry g-1 handles");
        level = matrix_from_columns3({torus->torus_image[0], torus->torus_image[1]});
    } else {
        const auto& ns = std::get<NonorientableStandard>(w.shape);
        if (orientable) throw std::invalid_argument("nonorientable witness for an orientable surface");
        if (genus % 2 != 0 || genus < 4)
            throw std::invalid_argument("nonorientable witness requires even genus >= 4");
        const std::size_t expected = static_cast<std::size_t>((genus - 4) / 2);
        if (ns.handle_pairs.size() != expected || w.trace.size() != expected)
            throw std::invalid_argument("nonorientable witness must carry (h-4)/2 handle pairs");
        level = matrix_from_columns3({ns.torus_image[0], ns.torus_image[1], ns.cross_tube_class});
    }

    // Base-shape side conditions; the shape's arc and pair lists must agree
    // with the trace they summarize.
    if (const auto* sphere = std::get_if<SphereWithTubes>(&w.shape)) {
        if (!omega(f).is_zero()) return false;
        for (std::size_t i = 0; i < w.trace.size(); ++i)
            if (sphere->arc_classes[i] != w.trace[i].arc_class) return false;
    } else if (const auto* torus = std::get_if<TorusWithHandles>(&w.shape)) {
        if (!primitive3(torus->torus_image[0]) || !primitive3(torus->torus_image[1])) return false;
        for (std::size_t i = 0; i < w.trace.size(); ++i)
            if (torus->arc_classes[i] != w.trace[i].arc_class) return false;
        std::vector<Int> t0(torus->torus_image[0].begin(), torus->torus_image[0].end());
        std::vector<Int> t1(torus->torus_image[1].begin(), torus->torus_image[1].end());
        std::array<Int, 3> wdg = wedge(t0, t1);
        OmegaClass om = omega(f);
        if (wdg[0] != om.a || wdg[1] != om.b || wdg[2] != om.c) return false;
    } else {
        const auto& ns = std::get<NonorientableStandard>(w.shape);
        if (!primitive3(ns.torus_image[0]) || !primitive3(ns.torus_image[1])) return false;
        for (std::size_t i = 0; i < w.trace.size(); ++i)
            if (ns.handle_pairs[i].kernel_vector != w.trace[i].kernel_vector ||
                ns.handle_pairs[i].partner_vector != w.trace[i].partner_vector)
                return false;
        if (abs_det(level) != 1) return false;  // base map must stay surjective
        // w1 on the base: dual class orthogonal to the torus, hitting m once.
        Mod2Matrix sys(3, 3);
        for (std::size_t c = 0; c < 3; ++c)
            for (std::size_t r = 0; r < 3; ++r)
                sys(c, r) = static_cast<Bit>(mpz_odd_p(level(r, c).get_mpz_t()) ? 1 : 0);
        if (!solve_mod2(sys, {0, 0, 1})) return false;
        std::vector<Int> t0(ns.torus_image[0].begin(), ns.torus_image[0].end());
        std::vector<Int> t1(ns.torus_image[1].begin(), ns.torus_image[1].end());
        std::array<Int, 3> wdg = wedge(t0, t1);
        if (wdg[0] % 2 == 0 && wdg[1] % 2 == 0 && wdg[2] % 2 == 0) return false;  // mod-2 class
    }

    // Replay: re-attach the surgered pair with its recorded images and undo
    // the basis change, from the base back to the input.
    for (auto it = w.trace.rbegin(); it != w.trace.rend(); ++it) {
        const ReductionStep& step = *it;
        IntMatrix rebuilt(3, level.cols() + 2);
        if (orientable) {
            // [retained pairs | 0 | arc]
            for (std::size_t c = 0; c < level.cols(); ++c)
                for (std::size_t r = 0; r < 3; ++r) rebuilt(r, c) = level(r, c);
            for (std::size_t r = 0; r < 3; ++r) rebuilt(r, level.cols() + 1) = step.arc_class[r];
        } else {
            // [retained pairs | 0 | arc | m]
            const std::size_t kept = level.cols() - 1;
            for (std::size_t c = 0; c < kept; ++c)
                for (std::size_t r = 0; r < 3; ++r) rebuilt(r, c) = level(r, c);
            for (std::size_t r = 0; r < 3; ++r) {
                rebuilt(r, kept + 1) = step.arc_class[r];
                rebuilt(r, kept + 2) = level(r, kept);
            }
        }
        auto binv = inverse_unimodular(step.basis_change);
        if (!binv) return false;
        if (step.basis_change.rows() != rebuilt.cols()) return false;
        IntMatrix previous = rebuilt * *binv;
        if (!check_step(step, previous, orientable)) return false;
        level = std::move(previous);
    }

    return level == f.matrix();
}

}  // namespace torusemb

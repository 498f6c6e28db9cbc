#include "invariants.hpp"

#include <stdexcept>

namespace torusemb {

TorusMap::TorusMap(SurfaceModel surface, IntMatrix matrix)
    : surface_(surface), matrix_(std::move(matrix)) {
    if (matrix_.rows() != 3 || matrix_.cols() != surface_.free_rank())
        throw std::invalid_argument("matrix must be 3 x free rank of the surface");
}

TorusMap new_map(const SurfaceModel& surface, const IntMatrix& matrix, BasisTag basis) {
    if (basis == BasisTag::Standard) return TorusMap(surface, matrix);

    if (surface.kind() != SurfaceKind::Nonorientable)
        throw std::invalid_argument("crosscap input requires a nonorientable surface");
    const std::size_t h = static_cast<std::size_t>(surface.genus());
    if (matrix.rows() != 3 || matrix.cols() != h)
        throw std::invalid_argument("crosscap matrix must be 3 x h");
    for (std::size_t r = 0; r < 3; ++r) {
        Int sum = 0;
        for (std::size_t c = 0; c < h; ++c) sum += matrix(r, c);
        if (sum != 0)
            throw std::invalid_argument(
                "crosscap matrix columns must sum to zero: torsion generator must map to zero");
    }
    if (surface.crosscap_presentation()) {
        // Odd genus stays in crosscap coordinates; the free basis is
        // (c1, ..., c_{h-1}).
        std::vector<std::size_t> idx;
        for (std::size_t c = 0; c + 1 < h; ++c) idx.push_back(c);
        return TorusMap(surface, matrix.select_columns(idx));
    }
    IntMatrix s = crosscap_to_standard(surface.genus());
    std::vector<std::size_t> idx;
    for (std::size_t c = 0; c + 1 < h; ++c) idx.push_back(c);  // drop the t column
    return TorusMap(surface, matrix * s.select_columns(idx));
}

OmegaClass omega(const TorusMap& f) {
    if (f.surface().kind() != SurfaceKind::Orientable)
        throw std::domain_error("omega requires an orientable surface");
    SkewForm j = integral_skew_form(f.surface());
    std::vector<Int> r1 = f.matrix().row_vector(0);
    std::vector<Int> r2 = f.matrix().row_vector(1);
    std::vector<Int> r3 = f.matrix().row_vector(2);
    return OmegaClass{j.pair(r1, r2), j.pair(r2, r3), j.pair(r1, r3)};
}

std::array<Bit, 3> omega_mod2(const TorusMap& f) {
    if (f.surface().kind() != SurfaceKind::Nonorientable)
        throw std::domain_error("omega_mod2 requires a nonorientable surface");
    Mod2Matrix q = mod2_form(f.surface());
    auto qinv = q.inverse();
    if (!qinv) throw std::logic_error("surface mod-2 form must be nondegenerate");

    const std::size_t fr = f.surface().free_rank();
    Mod2Matrix rows = Mod2Matrix::reduction_of(f.matrix());
    auto extended_row = [&](std::size_t r) {
        std::vector<Bit> v(fr + 1, 0);  // zero entry for t
        for (std::size_t c = 0; c < fr; ++c) v[c] = rows(r, c);
        return v;
    };
    auto pair_rows = [&](std::size_t i, std::size_t k) -> Bit {
        std::vector<Bit> ri = extended_row(i);
        std::vector<Bit> rk = mod2_mat_vec(*qinv, extended_row(k));
        Bit s = 0;
        for (std::size_t c = 0; c < ri.size(); ++c)
            if (ri[c] && rk[c]) s ^= 1;
        return s;
    };
    return {pair_rows(0, 1), pair_rows(1, 2), pair_rows(0, 2)};
}

ImageProfile image_profile(const TorusMap& f) {
    SmithDecomposition s = snf(f.matrix());
    ImageProfile p;
    p.rank = s.invariant_factors.size();
    p.invariant_factors = s.invariant_factors;
    p.is_summand = true;
    for (const Int& d : p.invariant_factors)
        if (d != 1) p.is_summand = false;
    p.is_surjective = p.rank == 3 && p.is_summand;
    return p;
}

std::optional<std::array<Bit, 3>> w1_pullback_witness(const TorusMap& f) {
    if (f.surface().kind() != SurfaceKind::Nonorientable)
        throw std::domain_error("w1 pullback requires a nonorientable surface");
    const std::size_t fr = f.surface().free_rank();
    std::vector<Bit> w1 = f.surface().w1_full();

    // One equation per free generator, x . f(gen) = w1(gen), plus the t
    // equation x . 0 = w1(t). The latter is 0 = 0 for even genus and the
    // unsatisfiable 0 = 1 for odd genus.
    Mod2Matrix rows = Mod2Matrix::reduction_of(f.matrix());
    Mod2Matrix system(fr + 1, 3);
    std::vector<Bit> rhs(fr + 1, 0);
    for (std::size_t c = 0; c < fr; ++c) {
        for (std::size_t r = 0; r < 3; ++r) system(c, r) = rows(r, c);
        rhs[c] = w1[c];
    }
    rhs[fr] = w1[fr];
    auto x = solve_mod2(system, rhs);
    if (!x) return std::nullopt;
    return std::array<Bit, 3>{(*x)[0], (*x)[1], (*x)[2]};
}

KernelData kernel_data(const TorusMap& f) {
    SkewForm form = integral_skew_form(f.surface());  // rejects odd genus
    KernelData kd;
    kd.basis = kernel_basis(f.matrix());
    kd.gram = skew_gram(form, kd.basis);
    kd.det_gram = abs_det(kd.gram);
    if (f.surface().kind() == SurfaceKind::Nonorientable) {
        const std::size_t m_index = f.surface().free_rank() - 1;
        for (const auto& v : kd.basis)
            if (v[m_index] != 0) kd.m_coefficients_nonzero = true;
    }
    return kd;
}

std::array<Int, 3> wedge(const std::vector<Int>& p, const std::vector<Int>& q) {
    if (p.size() != 3 || q.size() != 3) throw std::invalid_argument("wedge requires Z^3 vectors");
    return {p[0] * q[1] - p[1] * q[0], p[1] * q[2] - p[2] * q[1], p[0] * q[2] - p[2] * q[0]};
}

}  // namespace torusemb

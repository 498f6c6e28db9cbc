#include "surfaces.hpp"

#include <stdexcept>

namespace torusemb {

SurfaceModel SurfaceModel::orientable(long genus) {
    if (genus < 0) throw std::invalid_argument("orientable genus must be >= 0");
    return SurfaceModel(SurfaceKind::Orientable, genus);
}

SurfaceModel SurfaceModel::nonorientable(long genus) {
    if (genus < 1) throw std::invalid_argument("nonorientable genus must be >= 1");
    return SurfaceModel(SurfaceKind::Nonorientable, genus);
}

SurfaceModel make_surface(SurfaceKind kind, long genus) {
    return kind == SurfaceKind::Orientable ? SurfaceModel::orientable(genus)
                                           : SurfaceModel::nonorientable(genus);
}

std::size_t SurfaceModel::free_rank() const {
    return kind_ == SurfaceKind::Orientable ? static_cast<std::size_t>(2 * genus_)
                                            : static_cast<std::size_t>(genus_ - 1);
}

bool SurfaceModel::crosscap_presentation() const {
    return kind_ == SurfaceKind::Nonorientable && genus_ % 2 == 1;
}

std::size_t SurfaceModel::handle_pairs() const {
    if (kind_ == SurfaceKind::Orientable) return static_cast<std::size_t>(genus_);
    if (genus_ % 2 != 0) throw std::domain_error("odd nonorientable genus has no handle pairs");
    return static_cast<std::size_t>((genus_ - 2) / 2);
}

std::vector<std::string> SurfaceModel::basis_labels() const {
    std::vector<std::string> labels;
    if (crosscap_presentation()) {
        for (long i = 1; i < genus_; ++i) labels.push_back("c" + std::to_string(i));
        return labels;
    }
    const std::size_t g = kind_ == SurfaceKind::Orientable ? static_cast<std::size_t>(genus_)
                                                           : handle_pairs();
    for (std::size_t i = 1; i <= g; ++i) {
        labels.push_back("a" + std::to_string(i));
        labels.push_back("b" + std::to_string(i));
    }
    if (kind_ == SurfaceKind::Nonorientable) labels.push_back("m");
    return labels;
}

std::vector<Bit> SurfaceModel::w1_full() const {
    const std::size_t fr = free_rank();
    std::vector<Bit> w(fr + (has_torsion() ? 1 : 0), 0);
    if (kind_ == SurfaceKind::Orientable) return w;
    if (crosscap_presentation()) {
        for (std::size_t i = 0; i < fr; ++i) w[i] = 1;  // every crosscap reverses orientation
        w[fr] = 1;                                      // t = c1 + ... + ch, h odd
    } else {
        w[fr - 1] = 1;  // only m reverses orientation; t is a sum of an even count
    }
    return w;
}

Mod2Matrix mod2_form(const SurfaceModel& s) {
    if (s.kind() == SurfaceKind::Orientable) {
        const std::size_t g = static_cast<std::size_t>(s.genus());
        Mod2Matrix q(2 * g, 2 * g);
        for (std::size_t i = 0; i < g; ++i) {
            q(2 * i, 2 * i + 1) = 1;
            q(2 * i + 1, 2 * i) = 1;
        }
        return q;
    }
    const std::size_t h = static_cast<std::size_t>(s.genus());
    Mod2Matrix q(h, h);
    if (s.crosscap_presentation()) {
        // Basis (c1, ..., c_{h-1}, t), t = c1 + ... + ch against the identity
        // crosscap form.
        for (std::size_t i = 0; i + 1 < h; ++i) {
            q(i, i) = 1;
            q(i, h - 1) = 1;
            q(h - 1, i) = 1;
        }
        q(h - 1, h - 1) = 1;  // t.t = h mod 2
        return q;
    }
    const std::size_t g = s.handle_pairs();
    for (std::size_t i = 0; i < g; ++i) {
        q(2 * i, 2 * i + 1) = 1;
        q(2 * i + 1, 2 * i) = 1;
    }
    // (m, t) block: m.m = 1, m.t = 1, t.t = 0.
    q(2 * g, 2 * g) = 1;
    q(2 * g, 2 * g + 1) = 1;
    q(2 * g + 1, 2 * g) = 1;
    return q;
}

SkewForm integral_skew_form(const SurfaceModel& s) {
    if (s.kind() == SurfaceKind::Orientable)
        return SkewForm::standard_symplectic(static_cast<std::size_t>(s.genus()));
    if (s.crosscap_presentation())
        throw std::domain_error("integral pairing is undefined for odd nonorientable genus");
    return SkewForm::symplectic_with_radical(s.handle_pairs());
}

IntMatrix crosscap_to_standard(long h) {
    if (h < 2 || h % 2 != 0) throw std::invalid_argument("crosscap conversion requires even genus >= 2");
    const std::size_t n = static_cast<std::size_t>(h);
    const std::size_t g = (n - 2) / 2;
    IntMatrix s(n, n);
    for (std::size_t i = 0; i < g; ++i) {
        s(2 * i, 2 * i) = 1;  // a_{i+1} = c_{2i+1} + c_{2i+2}
        s(2 * i + 1, 2 * i) = 1;
        for (std::size_t r = 2 * i + 1; r <= n - 2; ++r) s(r, 2 * i + 1) = 1;  // b staircase
    }
    s(n - 1, n - 2) = 1;                                // m = c_h
    for (std::size_t r = 0; r < n; ++r) s(r, n - 1) = 1;  // t = c_1 + ... + c_h

    // The construction is trusted nowhere: verify unimodularity, the mod-2
    // form conjugation, and the w1 transport before handing it out.
    if (abs_det(s) != 1) throw std::logic_error("crosscap basis change is not unimodular");
    SurfaceModel model = SurfaceModel::nonorientable(h);
    Mod2Matrix smod = Mod2Matrix::reduction_of(s);
    Mod2Matrix conj = smod.transposed() * smod;  // crosscap form is the identity
    if (!(conj == mod2_form(model)))
        throw std::logic_error("crosscap basis change does not carry the mod-2 form");
    std::vector<Bit> w1 = model.w1_full();
    for (std::size_t c = 0; c < n; ++c) {
        Bit pulled = 0;
        for (std::size_t r = 0; r < n; ++r)
            pulled ^= static_cast<Bit>(mpz_odd_p(s(r, c).get_mpz_t()) ? 1 : 0);
        if (pulled != w1[c]) throw std::logic_error("crosscap basis change does not carry w1");
    }
    return s;
}

bool w1_has_integral_lift(const SurfaceModel& s) {
    return s.kind() == SurfaceKind::Orientable || s.genus() % 2 == 0;
}

}  // namespace torusemb

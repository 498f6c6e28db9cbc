#pragma once

#include "exactlin.hpp"
#include "mod2.hpp"

#include <string>
#include <vector>

namespace torusemb {

enum class SurfaceKind { Orientable, Nonorientable };

// First-homology model of a closed surface.
//
// Orientable genus g:        free basis (a1, b1, ..., ag, bg), no torsion.
// Nonorientable even h=2g+2: free basis (a1, b1, ..., ag, bg, m) plus the
//                            order-2 class t; m is the orientation-reversing
//                            crosstube generator.
// Nonorientable odd h:       free crosscap basis (c1, ..., c_{h-1}) plus t,
//                            where t = c1 + ... + ch with ch eliminated.
class SurfaceModel {
public:
    static SurfaceModel orientable(long genus);
    static SurfaceModel nonorientable(long genus);

    SurfaceKind kind() const { return kind_; }
    long genus() const { return genus_; }

    std::size_t free_rank() const;  // 2g, or h-1
    bool has_torsion() const { return kind_ == SurfaceKind::Nonorientable; }
    bool crosscap_presentation() const;  // odd nonorientable genus
    std::size_t handle_pairs() const;    // g with (a_i, b_i) pairs in the free basis

    // Labels of the free basis, in storage order.
    std::vector<std::string> basis_labels() const;

    // w1 as a Z_2 functional on the free basis followed by t (when present).
    std::vector<Bit> w1_full() const;

    bool operator==(const SurfaceModel&) const = default;

private:
    SurfaceModel(SurfaceKind kind, long genus) : kind_(kind), genus_(genus) {}

    SurfaceKind kind_ = SurfaceKind::Orientable;
    long genus_ = 0;
};

SurfaceModel make_surface(SurfaceKind kind, long genus);

// Mod-2 intersection form over the full Z_2 basis (free basis plus t). Its
// diagonal is the w1 vector: x.x = w1(x) mod 2 on a surface.
Mod2Matrix mod2_form(const SurfaceModel& s);

// Integral skew pairing on the free basis: the standard symplectic form for
// orientable surfaces; for even nonorientable genus the symplectic form on
// the (a, b) part extended by m in the radical. Undefined for odd genus.
SkewForm integral_skew_form(const SurfaceModel& s);

// Unimodular h x h matrix whose columns express the standard basis
// (a1, b1, ..., ag, bg, m, t) of an even-genus surface in crosscap
// coordinates (c1, ..., ch):
//   a_i = c_{2i-1} + c_{2i},  b_i = c_{2i} + ... + c_{h-1},
//   m = c_h,  t = c_1 + ... + c_h.
IntMatrix crosscap_to_standard(long h);

// Whether w1 is the mod-2 reduction of an integral cohomology class: always
// for orientable surfaces, and exactly for even nonorientable genus.
bool w1_has_integral_lift(const SurfaceModel& s);

}  // namespace torusemb

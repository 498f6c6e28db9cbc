#pragma once

#include "surfaces.hpp"

#include <array>
#include <optional>

namespace torusemb {

enum class BasisTag { Standard, Crosscap };

// A homotopy class of maps F -> T^3, recorded as the matrix of the induced
// map on first homology over the free standard basis of the surface. Rows
// are the (x, y, z) coordinates of H_1(T^3); columns follow basis_labels().
// The torsion class t always maps to zero and is not stored.
class TorusMap {
public:
    TorusMap(SurfaceModel surface, IntMatrix matrix);

    const SurfaceModel& surface() const { return surface_; }
    const IntMatrix& matrix() const { return matrix_; }

private:
    SurfaceModel surface_;
    IntMatrix matrix_;
};

// Validates and converts a map description. Standard input is a
// 3 x free_rank matrix. Crosscap input (nonorientable surfaces) is a 3 x h
// matrix of crosscap-generator images whose columns must sum to zero; even
// genus is converted to the standard basis, odd genus keeps crosscap
// coordinates.
TorusMap new_map(const SurfaceModel& surface, const IntMatrix& matrix, BasisTag basis);

// f_*[F] in H_2(T^3) for an orientable surface, on the ordered basis
// (x ^ y, y ^ z, x ^ z).
struct OmegaClass {
    Int a, b, c;

    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    Int gcd() const { return gcd_vector({a, b, c}); }
    bool operator==(const OmegaClass&) const = default;
};

OmegaClass omega(const TorusMap& f);

// f_*[U]_2 in H_2(T^3; Z_2) for a nonorientable surface, same basis order.
std::array<Bit, 3> omega_mod2(const TorusMap& f);

struct ImageProfile {
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;
    bool is_summand = false;    // all nonzero invariant factors are 1
    bool is_surjective = false; // invariant factors are exactly (1, 1, 1)
};

ImageProfile image_profile(const TorusMap& f);

// A class x in H^1(T^3; Z_2) with x o f = w1 on all of H_1, when one exists.
// Always absent for odd genus: the t equation reads 0 = 1 there.
std::optional<std::array<Bit, 3>> w1_pullback_witness(const TorusMap& f);

struct KernelData {
    std::vector<std::vector<Int>> basis;  // canonical kernel lattice basis
    IntMatrix gram;                       // under integral_skew_form(surface)
    Int det_gram;                         // |det gram|; 1 for an empty kernel
    bool m_coefficients_nonzero = false;  // some basis vector touches m
};

KernelData kernel_data(const TorusMap& f);

std::array<Int, 3> wedge(const std::vector<Int>& p, const std::vector<Int>& q);

}  // namespace torusemb

#pragma once

#include "decide.hpp"

#include <variant>

namespace torusemb {

// One surgery step at the homology level: a primitive kernel class is cut,
// its symplectic partner records the loop class the severed handle ran
// around. basis_change columns express the new standard basis (surgered pair
// last among the handle pairs) in the coordinates current at this step.
struct ReductionStep {
    std::vector<Int> kernel_vector;
    std::vector<Int> partner_vector;
    std::array<Int, 3> arc_class;  // image of the partner
    IntMatrix basis_change;
};

struct SphereWithTubes {
    std::vector<std::array<Int, 3>> arc_classes;  // one tube per handle, g total
};

struct TorusWithHandles {
    std::array<std::array<Int, 3>, 2> torus_image;  // basis of the image lattice
    std::vector<std::array<Int, 3>> arc_classes;    // g-1 trivial handles
};

struct HandlePair {
    std::vector<Int> kernel_vector;
    std::vector<Int> partner_vector;
};

struct NonorientableStandard {
    std::array<std::array<Int, 3>, 2> torus_image;
    std::array<Int, 3> cross_tube_class;  // image of m
    std::vector<HandlePair> handle_pairs; // (h-4)/2 surgered hyperbolic pairs
};

using WitnessShape = std::variant<SphereWithTubes, TorusWithHandles, NonorientableStandard>;

// Constructive description of an embedding in the homotopy class: base shape
// plus the full reduction trace, enough to rebuild the input matrix exactly.
struct EmbeddingWitness {
    WitnessShape shape;
    std::vector<ReductionStep> trace;
};

struct OrientableReduction {
    std::vector<ReductionStep> trace;
    TorusMap terminal;  // genus 1 with injective H_1 map, or genus 0
};

// Iterated surgery-on-a-map for orientable surfaces: drop symplectic pairs
// through primitive kernel classes until the map is injective on homology
// (genus 1) or nothing is left (genus 0).
OrientableReduction reduce_orientable(const TorusMap& f);

struct WitnessOutcome {
    Verdict verdict;
    std::optional<EmbeddingWitness> witness;  // present iff embeddable
};

WitnessOutcome build_witness(const TorusMap& f);

// Replays the witness: rebuilds the homology matrix through all recorded
// basis changes and rechecks every side condition (kernel membership,
// pairing 1, structure-preserving basis changes, primitivity of the base
// image, and the base-shape facts). Throws std::invalid_argument when the
// witness counts do not fit the surface at all.
bool verify_witness(const EmbeddingWitness& w, const TorusMap& f);

}  // namespace torusemb

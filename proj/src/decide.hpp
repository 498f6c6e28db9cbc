#pragma once

#include "invariants.hpp"

#include <string>

namespace torusemb {

enum class CaseTag { Nullhomologous, PrimitiveRank2, NonorientableAllFive, FailedConditions };

const char* case_tag_name(CaseTag tag);

struct ConditionReport {
    std::string name;
    bool holds = false;
    bool applicable = true;  // false: reported as "not applicable" (odd-genus pairing)
    std::string detail;
};

// Everything computed on the way to a verdict; reports surface all of it.
struct VerdictEvidence {
    std::optional<OmegaClass> omega;
    std::optional<Int> gcd_omega;
    std::optional<std::array<Bit, 3>> omega_mod2;
    ImageProfile profile;
    bool w1_checked = false;
    std::optional<std::array<Bit, 3>> w1_witness;
    std::optional<std::size_t> kernel_rank;
    std::optional<Int> det_gram;
    bool kernel_m_coefficients_nonzero = false;
};

struct Verdict {
    bool embeddable = false;
    SurfaceKind kind = SurfaceKind::Orientable;
    long genus = 0;
    CaseTag tag = CaseTag::FailedConditions;
    std::vector<ConditionReport> conditions;
    VerdictEvidence evidence;
    std::vector<std::string> notes;

    const ConditionReport* condition(const std::string& name) const;
};

// The embeddability decision. Orientable surfaces embed iff the induced
// second-homology class vanishes, or is primitive with image of rank two.
// Nonorientable surfaces embed iff genus is even, w1 pulls back from the
// torus, the mod-2 class is nonzero, H_1 surjects, and the kernel pairing is
// unimodular. Every well-formed map receives a verdict; all evidence is
// computed even after a condition fails.
Verdict decide(const TorusMap& f);

// All Z_2 triples (a', b', c') a second disjoint surface class could carry
// next to a given class (a, b, c): the solutions of
//   [[c, 0, a], [b, a, 0], [0, c, b]] (a', b', c')^T = 0 over Z_2.
std::vector<std::array<Bit, 3>> disjoint_pair_solutions(Bit a, Bit b, Bit c);

}  // namespace torusemb

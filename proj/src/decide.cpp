#include "decide.hpp"

#include <stdexcept>

namespace torusemb {

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Nullhomologous: return "Nullhomologous";
        case CaseTag::PrimitiveRank2: return "PrimitiveRank2";
        case CaseTag::NonorientableAllFive: return "NonorientableAllFive";
        case CaseTag::FailedConditions: return "FailedConditions";
    }
    return "unknown";
}

const ConditionReport* Verdict::condition(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

Verdict decide_orientable(const TorusMap& f) {
    Verdict v;
    v.kind = SurfaceKind::Orientable;
    v.genus = f.surface().genus();

    OmegaClass om = omega(f);
    Int g = om.gcd();
    v.evidence.omega = om;
    v.evidence.gcd_omega = g;
    v.evidence.profile = image_profile(f);
    KernelData kd = kernel_data(f);
    v.evidence.kernel_rank = kd.basis.size();
    v.evidence.det_gram = kd.det_gram;

    const bool null_homologous = om.is_zero();
    const bool primitive = g == 1;
    const bool rank_two = v.evidence.profile.rank == 2;

    if (primitive && v.evidence.profile.rank < 2)
        throw std::logic_error("nonzero second-homology class forces image rank >= 2");

    v.conditions.push_back({"null_homologous", null_homologous, true,
                            "f_*[F] = (" + to_decimal(om.a) + ", " + to_decimal(om.b) + ", " +
                                to_decimal(om.c) + ")"});
    v.conditions.push_back(
        {"omega_primitive", primitive, true, "gcd of f_*[F] coefficients = " + to_decimal(g)});
    v.conditions.push_back({"image_rank_two", rank_two, true,
                            "image rank = " + std::to_string(v.evidence.profile.rank)});

    v.embeddable = null_homologous || (primitive && rank_two);
    v.tag = null_homologous          ? CaseTag::Nullhomologous
            : (primitive && rank_two) ? CaseTag::PrimitiveRank2
                                      : CaseTag::FailedConditions;
    if (f.surface().genus() == 0)
        v.notes.push_back(
            "genus 0: every map of the sphere into the torus is homotopically trivial, so the "
            "null-homologous case applies");
    return v;
}

Verdict decide_nonorientable(const TorusMap& f) {
    Verdict v;
    v.kind = SurfaceKind::Nonorientable;
    v.genus = f.surface().genus();
    const bool even = v.genus % 2 == 0;

    std::array<Bit, 3> om2 = omega_mod2(f);
    v.evidence.omega_mod2 = om2;
    v.evidence.profile = image_profile(f);
    v.evidence.w1_checked = true;
    v.evidence.w1_witness = w1_pullback_witness(f);

    const bool mod2_nonzero = om2[0] || om2[1] || om2[2];
    const bool w1_ok = v.evidence.w1_witness.has_value();
    const bool surjective = v.evidence.profile.is_surjective;

    bool pairing_ok = false;
    std::string pairing_detail;
    if (even) {
        KernelData kd = kernel_data(f);
        v.evidence.kernel_rank = kd.basis.size();
        v.evidence.det_gram = kd.det_gram;
        v.evidence.kernel_m_coefficients_nonzero = kd.m_coefficients_nonzero;
        pairing_ok = kd.det_gram == 1;
        pairing_detail = "kernel rank " + std::to_string(kd.basis.size()) +
                         ", |det gram| = " + to_decimal(kd.det_gram);
        if (kd.m_coefficients_nonzero)
            v.notes.push_back(
                "kernel vectors involve the crosstube generator m; the Gram matrix uses the "
                "radical-extension pairing (m pairs to zero with everything)");
        if (kd.basis.empty())
            v.notes.push_back("empty kernel: Gram determinant is 1 by convention");
    } else {
        pairing_detail = "not applicable: no integral kernel pairing for odd genus";
    }

    v.conditions.push_back(
        {"genus_even", even, true, "nonorientable genus " + std::to_string(v.genus)});
    v.conditions.push_back({"w1_pullback", w1_ok, true,
                            w1_ok ? "witness class found" : "w1 is not pulled back from the torus"});
    v.conditions.push_back({"mod2_class_nonzero", mod2_nonzero, true,
                            "f_*[U]_2 = (" + std::to_string(om2[0]) + ", " + std::to_string(om2[1]) +
                                ", " + std::to_string(om2[2]) + ")"});
    v.conditions.push_back({"h1_surjective", surjective, true,
                            "image rank " + std::to_string(v.evidence.profile.rank)});
    v.conditions.push_back({"kernel_pairing_unimodular", pairing_ok, even, pairing_detail});

    v.embeddable = even && w1_ok && mod2_nonzero && surjective && pairing_ok;
    v.tag = v.embeddable ? CaseTag::NonorientableAllFive : CaseTag::FailedConditions;
    return v;
}

}  // namespace

Verdict decide(const TorusMap& f) {
    return f.surface().kind() == SurfaceKind::Orientable ? decide_orientable(f)
                                                         : decide_nonorientable(f);
}

std::vector<std::array<Bit, 3>> disjoint_pair_solutions(Bit a, Bit b, Bit c) {
    std::vector<std::array<Bit, 3>> out;
    for (int bits = 0; bits < 8; ++bits) {
        Bit ap = static_cast<Bit>(bits & 1);
        Bit bp = static_cast<Bit>((bits >> 1) & 1);
        Bit cp = static_cast<Bit>((bits >> 2) & 1);
        Bit e1 = static_cast<Bit>((c & ap) ^ (a & cp));
        Bit e2 = static_cast<Bit>((b & ap) ^ (a & bp));
        Bit e3 = static_cast<Bit>((c & bp) ^ (b & cp));
        if (!e1 && !e2 && !e3) out.push_back({ap, bp, cp});
    }
    return out;
}

}  // namespace torusemb

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "decide.hpp"
#include "testutil.hpp"

using namespace torusemb;

namespace {

TorusMap standard_map(const SurfaceModel& s, const IntMatrix& m) {
    return new_map(s, m, BasisTag::Standard);
}

bool condition_holds(const Verdict& v, const char* name) {
    const ConditionReport* c = v.condition(name);
    REQUIRE(c != nullptr);
    return c->holds;
}

}  // namespace

TEST_CASE("coordinate subtorus embeds") {
    Verdict v = decide(standard_map(SurfaceModel::orientable(1),
                                    IntMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}})));
    CHECK(v.embeddable);
    CHECK(v.tag == CaseTag::PrimitiveRank2);
    CHECK(condition_holds(v, "omega_primitive"));
    CHECK(condition_holds(v, "image_rank_two"));
    CHECK_FALSE(condition_holds(v, "null_homologous"));
}

TEST_CASE("genus zero always embeds, with the convention spelled out") {
    Verdict v = decide(standard_map(SurfaceModel::orientable(0), IntMatrix(3, 0)));
    CHECK(v.embeddable);
    CHECK(v.tag == CaseTag::Nullhomologous);
    CHECK_FALSE(v.notes.empty());
}

TEST_CASE("Klein bottle maps never embed and always fail surjectivity") {
    SurfaceModel klein = SurfaceModel::nonorientable(2);
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            for (long z = -2; z <= 2; ++z) {
                IntMatrix m(3, 1);
                m(0, 0) = x;
                m(1, 0) = y;
                m(2, 0) = z;
                Verdict v = decide(standard_map(klein, m));
                CHECK_FALSE(v.embeddable);
                CHECK_FALSE(condition_holds(v, "h1_surjective"));
                // evidence is computed despite the failures
                CHECK(v.evidence.omega_mod2.has_value());
                CHECK(v.evidence.det_gram.has_value());
            }
}

TEST_CASE("standard genus-4 map embeds") {
    Verdict v = decide(standard_map(SurfaceModel::nonorientable(4), IntMatrix::identity(3)));
    CHECK(v.embeddable);
    CHECK(v.tag == CaseTag::NonorientableAllFive);
    for (const auto& c : v.conditions) CHECK(c.holds);
}

TEST_CASE("primitive class with rank-3 image does not embed") {
    Verdict v = decide(standard_map(
        SurfaceModel::orientable(2),
        IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})));
    CHECK_FALSE(v.embeddable);
    CHECK(condition_holds(v, "omega_primitive"));
    CHECK_FALSE(condition_holds(v, "image_rank_two"));
    CHECK(v.tag == CaseTag::FailedConditions);
}

TEST_CASE("nonzero nonprimitive class does not embed") {
    Verdict v = decide(standard_map(SurfaceModel::orientable(1),
                                    IntMatrix::from_rows({{2, 0}, {0, 1}, {0, 0}})));
    CHECK_FALSE(v.embeddable);
    CHECK(v.evidence.omega == OmegaClass{2, 0, 0});
    CHECK(*v.evidence.gcd_omega == 2);
}

TEST_CASE("genus-6 fixture with kernel through the crosstube embeds") {
    // (a1, b1, a2, b2, m) -> (x, y, 2z, x, z)
    Verdict v = decide(standard_map(
        SurfaceModel::nonorientable(6),
        IntMatrix::from_rows({{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 0, 2, 0, 1}})));
    CHECK(v.embeddable);
    CHECK(*v.evidence.det_gram == 1);
    CHECK(v.evidence.kernel_m_coefficients_nonzero);
    CHECK_FALSE(v.notes.empty());  // the radical-extension caveat is surfaced
}

TEST_CASE("genus-6 map with doubled handle images fails only unimodularity") {
    // (a1, b1, a2, b2, m) -> (x, y, 2x, 2y, z): kernel pairing has det 25
    Verdict v = decide(standard_map(
        SurfaceModel::nonorientable(6),
        IntMatrix::from_rows({{1, 0, 2, 0, 0}, {0, 1, 0, 2, 0}, {0, 0, 0, 0, 1}})));
    CHECK_FALSE(v.embeddable);
    CHECK(condition_holds(v, "genus_even"));
    CHECK(condition_holds(v, "w1_pullback"));
    CHECK(condition_holds(v, "mod2_class_nonzero"));
    CHECK(condition_holds(v, "h1_surjective"));
    CHECK_FALSE(condition_holds(v, "kernel_pairing_unimodular"));
    CHECK(*v.evidence.det_gram == 25);
}

TEST_CASE("odd genus reports the pairing as not applicable and fails (1) and (2)") {
    SplitMix64 rng{301};
    for (long h : {1L, 3L, 5L}) {
        SurfaceModel s = SurfaceModel::nonorientable(h);
        for (int iter = 0; iter < 40; ++iter) {
            IntMatrix m = testutil::random_matrix(3, s.free_rank(), 3, rng);
            Verdict v = decide(standard_map(s, m));
            CHECK_FALSE(v.embeddable);
            CHECK_FALSE(condition_holds(v, "genus_even"));
            CHECK_FALSE(condition_holds(v, "w1_pullback"));
            const ConditionReport* c5 = v.condition("kernel_pairing_unimodular");
            REQUIRE(c5);
            CHECK_FALSE(c5->applicable);
            CHECK_FALSE(v.evidence.det_gram.has_value());
        }
    }
}

TEST_CASE("embeddable PrimitiveRank2 maps have summand image") {
    SplitMix64 rng{302};
    int seen = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const long g = 1 + rng.uniform(0, 2);
        IntMatrix m = testutil::random_matrix(3, static_cast<std::size_t>(2 * g), 2, rng);
        Verdict v = decide(standard_map(SurfaceModel::orientable(g), m));
        if (v.tag == CaseTag::PrimitiveRank2) {
            ++seen;
            CHECK(v.evidence.profile.is_summand);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("disjoint pair solutions") {
    auto zero = disjoint_pair_solutions(0, 0, 0);
    CHECK(zero.size() == 8);

    for (int bits = 1; bits < 8; ++bits) {
        const Bit a = static_cast<Bit>(bits & 1);
        const Bit b = static_cast<Bit>((bits >> 1) & 1);
        const Bit c = static_cast<Bit>((bits >> 2) & 1);
        auto sols = disjoint_pair_solutions(a, b, c);
        REQUIRE(sols.size() == 2);
        CHECK(((sols[0] == std::array<Bit, 3>{0, 0, 0} && sols[1] == std::array<Bit, 3>{a, b, c}) ||
               (sols[1] == std::array<Bit, 3>{0, 0, 0} && sols[0] == std::array<Bit, 3>{a, b, c})));
    }
}

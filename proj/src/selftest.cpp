#include "selftest.hpp"

#include "reference.hpp"
#include "rng.hpp"
#include "witness.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>

namespace torusemb {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Failure collector: checks keep running so the detail names every miss.
struct Scorecard {
    bool pass = true;
    std::ostringstream detail;
    int failures = 0;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures < 5) detail << (failures ? "; " : "") << what;
        ++failures;
    }
    void note(const std::string& what) {
        if (pass && failures == 0 && detail.tellp() == std::streampos(0)) detail << what;
    }
};

IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, SplitMix64& rng) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
    return m;
}

IntMatrix random_gl3(SplitMix64& rng) {
    IntMatrix u = IntMatrix::identity(3);
    const int ops = 6 + static_cast<int>(rng.uniform(0, 5));
    for (int k = 0; k < ops; ++k) {
        const long kind = rng.uniform(0, 2);
        const std::size_t i = static_cast<std::size_t>(rng.uniform(0, 2));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, 2));
        if (kind == 0) {
            if (j == i) j = (j + 1) % 3;
            u.add_row_multiple(i, j, Int(rng.uniform(-2, 2)));
        } else if (kind == 1) {
            u.swap_rows(i, j);
        } else {
            u.negate_row(i);
        }
    }
    return u;
}

// Transvection x -> x + <v, x> v for the given skew form; preserves the form
// for any v, and is unimodular.
IntMatrix transvection(const SkewForm& form, const std::vector<Int>& v) {
    const std::size_t n = form.dimension();
    std::vector<Int> vrow = mat_vec(form.gram().transposed(), v);  // v^T F
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t(r, c) += v[r] * vrow[c];
    return t;
}

// Random basis change of the surface preserving w1, the mod-2 form, and the
// integral pairing: symplectic transvections (with even crosstube component
// on nonorientable surfaces) and a_i -> a_i + 2m shears.
IntMatrix random_structure_preserving(const SurfaceModel& s, SplitMix64& rng) {
    const std::size_t n = s.free_rank();
    SkewForm form = integral_skew_form(s);
    IntMatrix p = IntMatrix::identity(n);
    const bool orientable = s.kind() == SurfaceKind::Orientable;
    const int ops = 3 + static_cast<int>(rng.uniform(0, 2));
    for (int k = 0; k < ops; ++k) {
        if (!orientable && n >= 3 && rng.uniform(0, 2) == 0) {
            IntMatrix shear = IntMatrix::identity(n);
            shear(n - 1, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2))) =
                2 * rng.uniform(-1, 1);
            p = p * shear;
            continue;
        }
        std::vector<Int> v(n);
        const std::size_t ab = orientable ? n : n - 1;
        for (std::size_t i = 0; i < ab; ++i) v[i] = rng.uniform(-1, 1);
        if (!orientable) v[n - 1] = 2 * rng.uniform(-1, 1);
        p = p * transvection(form, v);
    }
    return p;
}

TorusMap map_of(const SurfaceModel& s, const IntMatrix& m) {
    return new_map(s, m, BasisTag::Standard);
}

TorusMap subtorus_fixture() {
    return map_of(SurfaceModel::orientable(1), IntMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}}));
}

TorusMap u4_standard_fixture() {
    return map_of(SurfaceModel::nonorientable(4), IntMatrix::identity(3));
}

TorusMap u6_two_z_fixture() {  // (a1,b1,a2,b2,m) -> (x, y, 2z, x, z)
    return map_of(SurfaceModel::nonorientable(6),
                  IntMatrix::from_rows({{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 0, 2, 0, 1}}));
}

TorusMap u6_two_x_fixture() {  // (a1,b1,a2,b2,m) -> (x, y, 2x, 0, z)
    return map_of(SurfaceModel::nonorientable(6),
                  IntMatrix::from_rows({{1, 0, 2, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}));
}

std::vector<TorusMap> invariance_pool() {
    std::vector<TorusMap> pool;
    pool.push_back(subtorus_fixture());
    pool.push_back(u4_standard_fixture());
    pool.push_back(u6_two_z_fixture());
    pool.push_back(u6_two_x_fixture());
    pool.push_back(map_of(SurfaceModel::orientable(2), IntMatrix(3, 4)));
    pool.push_back(map_of(SurfaceModel::orientable(1),
                          IntMatrix::from_rows({{2, 0}, {0, 1}, {0, 0}})));
    pool.push_back(map_of(SurfaceModel::orientable(2),
                          IntMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}})));
    pool.push_back(map_of(SurfaceModel::orientable(3), IntMatrix(3, 6)));

    SplitMix64 rng{0x5eed0001u};
    std::size_t i = 0;
    while (pool.size() < 200) {
        if (i % 2 == 0) {
            const long g = 1 + static_cast<long>((i / 2) % 4);
            pool.push_back(map_of(SurfaceModel::orientable(g),
                                  random_matrix(3, static_cast<std::size_t>(2 * g), 3, rng)));
        } else {
            const long h = 4 + 2 * static_cast<long>((i / 2) % 3);
            pool.push_back(map_of(SurfaceModel::nonorientable(h),
                                  random_matrix(3, static_cast<std::size_t>(h - 1), 3, rng)));
        }
        ++i;
    }
    return pool;
}

std::string verdict_summary(const Verdict& v) {
    return std::string(v.embeddable ? "embeddable/" : "rejected/") + case_tag_name(v.tag);
}

// ---- the nine checks -------------------------------------------------------

CheckResult check_klein_bottle_exclusion() {
    auto t0 = Clock::now();
    Scorecard sc;
    SurfaceModel klein = SurfaceModel::nonorientable(2);
    long count = 0;
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            for (long z = -2; z <= 2; ++z) {
                IntMatrix m(3, 1);
                m(0, 0) = x;
                m(1, 0) = y;
                m(2, 0) = z;
                Verdict v = decide(map_of(klein, m));
                sc.require(!v.embeddable, "klein bottle map accepted");
                const ConditionReport* c4 = v.condition("h1_surjective");
                sc.require(c4 && !c4->holds, "rejection does not cite surjectivity");
                ++count;
            }
    double dt = seconds_since(t0);
    sc.require(dt < 10.0, "sweep exceeded 10 s");
    sc.note(std::to_string(count) + " maps rejected");
    return {"klein_bottle_exclusion", sc.pass, sc.detail.str()};
}

CheckResult check_odd_genus_exclusion() {
    auto t0 = Clock::now();
    Scorecard sc;
    SplitMix64 rng{0x5eed0002u};
    for (long h : {1L, 3L, 5L, 7L}) {
        SurfaceModel s = SurfaceModel::nonorientable(h);
        for (int i = 0; i < 1000; ++i) {
            IntMatrix m = random_matrix(3, s.free_rank(), 3, rng);
            Verdict v = decide(map_of(s, m));
            sc.require(!v.embeddable, "odd-genus map accepted (h=" + std::to_string(h) + ")");
            const ConditionReport* c1 = v.condition("genus_even");
            const ConditionReport* c2 = v.condition("w1_pullback");
            sc.require(c1 && !c1->holds, "condition (1) not reported false");
            sc.require(c2 && !c2->holds, "condition (2) not reported false");
        }
    }
    double dt = seconds_since(t0);
    sc.require(dt < 5.0, "sweep exceeded 5 s");
    sc.note("4000 maps rejected with (1) and (2) false");
    return {"odd_genus_exclusion", sc.pass, sc.detail.str()};
}

CheckResult check_standard_constructions() {
    Scorecard sc;
    {
        TorusMap f = subtorus_fixture();
        WitnessOutcome out = build_witness(f);
        sc.require(out.verdict.embeddable, "coordinate subtorus rejected");
        sc.require(out.verdict.tag == CaseTag::PrimitiveRank2, "subtorus case tag wrong");
        sc.require(out.witness.has_value(), "subtorus witness missing");
        if (out.witness) {
            sc.require(std::holds_alternative<TorusWithHandles>(out.witness->shape),
                       "subtorus witness shape wrong");
            sc.require(verify_witness(*out.witness, f), "subtorus witness fails verification");
        }
    }
    {
        TorusMap f = u4_standard_fixture();
        WitnessOutcome out = build_witness(f);
        sc.require(out.verdict.embeddable, "standard genus-4 map rejected");
        sc.require(out.witness.has_value(), "genus-4 witness missing");
        if (out.witness) {
            const auto* ns = std::get_if<NonorientableStandard>(&out.witness->shape);
            sc.require(ns != nullptr, "genus-4 witness shape wrong");
            if (ns) {
                sc.require(ns->handle_pairs.empty(), "genus-4 base must have no handle pairs");
                sc.require(ns->cross_tube_class == std::array<Int, 3>{0, 0, 1},
                           "cross tube class is not z");
                sc.require(ns->torus_image[0] == std::array<Int, 3>{1, 0, 0} &&
                               ns->torus_image[1] == std::array<Int, 3>{0, 1, 0},
                           "torus image is not (x, y)");
            }
            sc.require(verify_witness(*out.witness, f), "genus-4 witness fails verification");
        }
    }
    sc.note("both constructions accepted with verified witnesses");
    return {"standard_constructions_accepted", sc.pass, sc.detail.str()};
}

CheckResult check_u4_automatic_unimodularity() {
    auto t0 = Clock::now();
    Scorecard sc;
    SurfaceModel u4 = SurfaceModel::nonorientable(4);
    long checked = 0;
    long e[9];
    for (e[0] = -2; e[0] <= 2; ++e[0])
        for (e[1] = -2; e[1] <= 2; ++e[1])
            for (e[2] = -2; e[2] <= 2; ++e[2])
                for (e[3] = -2; e[3] <= 2; ++e[3])
                    for (e[4] = -2; e[4] <= 2; ++e[4])
                        for (e[5] = -2; e[5] <= 2; ++e[5]) {
                            // det expansion along the last row, batched over
                            // the first six entries
                            const long m01 = e[1] * e[5] - e[2] * e[4];
                            const long m02 = e[0] * e[5] - e[2] * e[3];
                            const long m03 = e[0] * e[4] - e[1] * e[3];
                            for (e[6] = -2; e[6] <= 2; ++e[6])
                                for (e[7] = -2; e[7] <= 2; ++e[7])
                                    for (e[8] = -2; e[8] <= 2; ++e[8]) {
                                        const long det = e[6] * m01 - e[7] * m02 + e[8] * m03;
                                        if (det != 1 && det != -1) continue;  // not surjective
                                        IntMatrix m(3, 3);
                                        for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = e[k];
                                        TorusMap f = map_of(u4, m);
                                        if (!w1_pullback_witness(f)) continue;
                                        auto om2 = omega_mod2(f);
                                        if (!om2[0] && !om2[1] && !om2[2]) continue;
                                        KernelData kd = kernel_data(f);
                                        sc.require(kd.basis.empty(), "nonempty kernel");
                                        sc.require(kd.det_gram == 1, "Gram determinant not 1");
                                        ++checked;
                                    }
                        }
    double dt = seconds_since(t0);
    sc.require(dt < 60.0, "sweep exceeded 60 s");
    sc.require(checked > 0, "sweep found no qualifying maps");
    sc.note(std::to_string(checked) + " qualifying maps, all with empty unimodular kernel");
    return {"u4_automatic_unimodularity", sc.pass, sc.detail.str()};
}

CheckResult check_disjoint_pair_solver() {
    Scorecard sc;
    for (int bits = 0; bits < 8; ++bits) {
        const Bit a = static_cast<Bit>(bits & 1);
        const Bit b = static_cast<Bit>((bits >> 1) & 1);
        const Bit c = static_cast<Bit>((bits >> 2) & 1);
        auto sols = disjoint_pair_solutions(a, b, c);
        if (bits == 0) {
            sc.require(sols.size() == 8, "zero class must admit all 8 solutions");
            continue;
        }
        sc.require(sols.size() == 2, "nonzero class must admit exactly 2 solutions");
        bool has_zero = false, has_self = false;
        for (const auto& s : sols) {
            if (s == std::array<Bit, 3>{0, 0, 0}) has_zero = true;
            if (s == std::array<Bit, 3>{a, b, c}) has_self = true;
        }
        sc.require(has_zero && has_self, "solutions are not {0, (a,b,c)}");
    }
    sc.note("all 8 coefficient classes verified");
    return {"disjoint_pair_solver", sc.pass, sc.detail.str()};
}

CheckResult check_invariance_suite() {
    auto t0 = Clock::now();
    Scorecard sc;
    SplitMix64 rng{0x5eed0003u};
    std::vector<TorusMap> pool = invariance_pool();
    for (const TorusMap& f : pool) {
        Verdict base = decide(f);
        for (int k = 0; k < 20; ++k) {
            IntMatrix u = random_gl3(rng);
            Verdict post = decide(TorusMap(f.surface(), u * f.matrix()));
            sc.require(post.embeddable == base.embeddable && post.tag == base.tag,
                       "post-composition changed verdict (" + verdict_summary(base) + " -> " +
                           verdict_summary(post) + ")");
        }
        for (int k = 0; k < 20; ++k) {
            IntMatrix p = random_structure_preserving(f.surface(), rng);
            Verdict pre = decide(TorusMap(f.surface(), f.matrix() * p));
            sc.require(pre.embeddable == base.embeddable && pre.tag == base.tag,
                       "precomposition changed verdict (" + verdict_summary(base) + " -> " +
                           verdict_summary(pre) + ")");
        }
    }
    double dt = seconds_since(t0);
    sc.require(dt < 60.0, "suite exceeded 60 s");
    sc.note(std::to_string(pool.size()) + " maps x 40 transforms invariant");
    return {"invariance_suite", sc.pass, sc.detail.str()};
}

CheckResult check_condition5_independence() {
    Scorecard sc;
    TorusMap f = u6_two_x_fixture();
    Verdict v = decide(f);
    const char* first_four[] = {"genus_even", "w1_pullback", "mod2_class_nonzero", "h1_surjective"};
    for (const char* name : first_four) {
        const ConditionReport* c = v.condition(name);
        sc.require(c && c->holds, std::string("condition ") + name + " does not hold");
    }
    const ConditionReport* c5 = v.condition("kernel_pairing_unimodular");
    sc.require(c5 && !c5->holds, "condition (5) holds (expected failure)");
    sc.require(v.evidence.det_gram && *v.evidence.det_gram == 0,
               "detGram = " + (v.evidence.det_gram ? to_decimal(*v.evidence.det_gram)
                                                   : std::string("none")) +
                   " (expected 0)");
    sc.note("fixture passes (1)-(4) and fails (5) with Gram determinant 0");
    return {"condition5_independence", sc.pass, sc.detail.str()};
}

CheckResult check_necessity_oracles() {
    Scorecard sc;
    SplitMix64 rng{0x5eed0004u};

    // gcd(omega) against the invariant-factor product on genus-1 maps with
    // image rank 2, and omega itself against the wedge-sum route.
    long rank2 = 0;
    SurfaceModel torus = SurfaceModel::orientable(1);
    for (int i = 0; i < 400; ++i) {
        IntMatrix m = random_matrix(3, 2, 4, rng);
        TorusMap f = map_of(torus, m);
        OmegaClass om = omega(f);
        auto oracle = reference::omega_wedge_sum(m);
        sc.require(om.a == oracle[0] && om.b == oracle[1] && om.c == oracle[2],
                   "omega disagrees with the wedge-sum oracle");
        ImageProfile p = image_profile(f);
        if (p.rank != 2) continue;
        ++rank2;
        Int expected = p.invariant_factors[0] * p.invariant_factors[1];
        Int got = om.gcd();
        sc.require(got == expected, "gcd(omega) " + to_decimal(got) + " != factor product " +
                                        to_decimal(expected));
    }
    sc.require(rank2 >= 100, "too few rank-2 samples");

    // Kernel-Gram determinant path against fraction-free elimination.
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = static_cast<std::size_t>(rng.uniform(0, 8));
        IntMatrix g(d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = r + 1; c < d; ++c) {
                g(r, c) = rng.uniform(-9, 9);
                g(c, r) = -g(r, c);
            }
        Int via_factors = abs_det(g);
        Int via_bareiss = abs_int(reference::bareiss_det(g));
        sc.require(via_factors == via_bareiss,
                   "determinant mismatch: " + to_decimal(via_factors) + " vs " +
                       to_decimal(via_bareiss));
    }
    sc.note(std::to_string(rank2) + " rank-2 maps and 500 skew determinants matched");
    return {"necessity_oracles", sc.pass, sc.detail.str()};
}

CheckResult check_witness_roundtrip() {
    Scorecard sc;
    SplitMix64 rng{0x5eed0005u};
    std::vector<TorusMap> pool = invariance_pool();
    long embeddable = 0;
    auto roundtrip = [&](const TorusMap& f) {
        WitnessOutcome out = build_witness(f);
        if (!out.verdict.embeddable) return;
        ++embeddable;
        if (!out.witness) {
            sc.require(false, "embeddable map without witness");
            return;
        }
        sc.require(verify_witness(*out.witness, f), "witness fails verification");
        const std::size_t steps = out.witness->trace.size();
        if (f.surface().kind() == SurfaceKind::Orientable) {
            const std::size_t g = static_cast<std::size_t>(f.surface().genus());
            if (out.verdict.tag == CaseTag::Nullhomologous)
                sc.require(steps == g, "null-homologous trace length != g");
            else
                sc.require(steps == g - 1, "primitive trace length != g-1");
        } else {
            const std::size_t h = static_cast<std::size_t>(f.surface().genus());
            sc.require(steps == (h - 4) / 2, "nonorientable trace length != (h-4)/2");
        }
    };
    for (const TorusMap& f : pool) {
        roundtrip(f);
        if (decide(f).embeddable) {
            for (int k = 0; k < 3; ++k) {
                roundtrip(TorusMap(f.surface(), random_gl3(rng) * f.matrix()));
                roundtrip(TorusMap(f.surface(),
                                   f.matrix() * random_structure_preserving(f.surface(), rng)));
            }
        }
    }
    sc.require(embeddable >= 10, "too few embeddable maps exercised");
    sc.note(std::to_string(embeddable) + " witnesses verified with exact trace lengths");
    return {"witness_roundtrip", sc.pass, sc.detail.str()};
}

using CheckFn = CheckResult (*)();

struct NamedCheck {
    const char* name;
    CheckFn fn;
};

constexpr NamedCheck kChecks[] = {
    {"klein_bottle_exclusion", check_klein_bottle_exclusion},
    {"odd_genus_exclusion", check_odd_genus_exclusion},
    {"standard_constructions_accepted", check_standard_constructions},
    {"u4_automatic_unimodularity", check_u4_automatic_unimodularity},
    {"disjoint_pair_solver", check_disjoint_pair_solver},
    {"invariance_suite", check_invariance_suite},
    {"condition5_independence", check_condition5_independence},
    {"necessity_oracles", check_necessity_oracles},
    {"witness_roundtrip", check_witness_roundtrip},
};

}  // namespace

std::size_t acceptance_check_count() { return sizeof(kChecks) / sizeof(kChecks[0]); }

const char* acceptance_check_name(std::size_t index) { return kChecks[index].name; }

CheckResult run_acceptance_check(std::size_t index) {
    try {
        return kChecks[index].fn();
    } catch (const std::exception& e) {
        return {kChecks[index].name, false, std::string("exception: ") + e.what()};
    }
}

std::vector<CheckResult> run_acceptance_suite() {
    std::vector<CheckResult> results;
    for (std::size_t i = 0; i < acceptance_check_count(); ++i)
        results.push_back(run_acceptance_check(i));
    return results;
}

}  // namespace torusemb

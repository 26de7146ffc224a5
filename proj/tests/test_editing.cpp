#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "patedit/editing.hpp"
#include "oracles.hpp"

using namespace patedit;
namespace pt = patedit::testing;

namespace {

const Pattern kCorner(2, 2, {1, 1, 1, 2});    // x x / x y
const Pattern kDiagonal(2, 2, {1, 2, 2, 1});  // x y / y x

bool result_is_free(const SymbolMatrix& result, const Pattern& p) {
    return !contains(OccurrenceQuery{p, result});
}

}  // namespace

TEST_CASE("theoretical_bound arithmetic") {
    CHECK(theoretical_bound(30, 30, 4, 2) == Rational(675));
    CHECK(theoretical_bound(5, 7, 3, 3) == Rational(35, 3));  // r = s: mn/s
    CHECK(theoretical_bound(4, 6, 1, 1) == Rational(24));     // s = r = 1: mn
    CHECK_THROWS_AS(theoretical_bound(3, 3, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_bound(3, 3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(theoretical_bound(0, 3, 2, 1), std::invalid_argument);
}

TEST_CASE("merge_smallest_classes on the three-symbol example") {
    SymbolMatrix m(2, 3, 3, {1, 2, 3, 1, 1, 2});
    EditPlan plan = merge_smallest_classes(m, 2);
    CHECK(plan.cost() == 3);  // classes sized 3,2,1; merge the two smallest
    CHECK(plan.result == SymbolMatrix::constant(2, 3, 3, 1));
    CHECK(Rational(plan.cost()) <= theoretical_bound(2, 3, 3, 2));
    CHECK(hamming_distance(m, plan.result) == plan.cost());
}

TEST_CASE("merge_smallest_classes degenerate cases") {
    // r = s on a constant matrix: the merged class is empty, cost 0.
    SymbolMatrix constant = SymbolMatrix::constant(3, 3, 3, 2);
    CHECK(merge_smallest_classes(constant, 3).cost() == 0);

    // r = 2, s = 2: result constant, cost = smaller class size.
    SymbolMatrix half(2, 2, 2, {1, 2, 2, 2});
    EditPlan plan = merge_smallest_classes(half, 2);
    CHECK(plan.cost() == 1);
    CHECK(plan.result.distinct_symbols() == 1);

    // Ties break toward the smaller symbol id both for the largest class
    // and among the merged ones.
    SymbolMatrix tied(2, 2, 2, {1, 2, 2, 1});
    EditPlan tied_plan = merge_smallest_classes(tied, 2);
    CHECK(tied_plan.result == SymbolMatrix::constant(2, 2, 2, 1));

    // Absent symbols are empty classes and merge for free.
    SymbolMatrix sparse(2, 2, 3, {1, 1, 1, 2});
    CHECK(merge_smallest_classes(sparse, 3).cost() == 0);   // merges symbol 3 only
    CHECK(merge_smallest_classes(sparse, 2).cost() == 1);   // merges symbols 3 and 2

    CHECK_THROWS_AS(merge_smallest_classes(sparse, 4), std::invalid_argument);
    CHECK_THROWS_AS(merge_smallest_classes(sparse, 0), std::invalid_argument);
}

TEST_CASE("merge cost equals the sum of the smallest class sizes") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        int s = 2 + rng() % 3;
        int r = 2 + rng() % s;
        if (r > s) r = s;
        SymbolMatrix m = pt::random_matrix(rng, 3 + rng() % 3, 3 + rng() % 3, s);
        EditPlan plan = merge_smallest_classes(m, r);

        auto hist = m.symbol_histogram();
        std::vector<long long> sizes(hist.begin() + 1, hist.end());
        std::sort(sizes.begin(), sizes.end());
        long long expected = 0;
        for (int i = 0; i < s - r + 1; ++i) expected += sizes[i];
        CHECK(plan.cost() == expected);
        CHECK(Rational(plan.cost()) <=
              theoretical_bound(m.rows(), m.cols(), s, r));
        CHECK(plan.result.distinct_symbols() <= std::max(r - 1, 1));
        CHECK(hamming_distance(m, plan.result) == plan.cost());
    }
}

TEST_CASE("merge result avoids every concrete r-class pattern up to 2x2") {
    std::mt19937 rng(59);
    std::vector<Pattern> two_class;
    for (auto [k, l] : {std::pair{1, 2}, {2, 1}, {2, 2}})
        for (const Pattern& p : pt::all_concrete_patterns(k, l, 2)) two_class.push_back(p);
    REQUIRE(two_class.size() == 9);

    for (int trial = 0; trial < 30; ++trial) {
        SymbolMatrix m = pt::random_matrix(rng, 4, 4, 3);
        EditPlan plan = merge_smallest_classes(m, 2);
        for (const Pattern& p : two_class) CHECK(result_is_free(plan.result, p));
    }
}

TEST_CASE("min_edit_distance on the corner pattern's defining matrix") {
    SymbolMatrix m(2, 2, 2, {1, 1, 1, 2});
    EditOutcome outcome = min_edit_distance(m, kCorner);
    CHECK(outcome.exact);
    CHECK(outcome.plan.cost() == 1);
    CHECK(outcome.lower_bound == 1);
    CHECK(outcome.upper_bound == 1);
    CHECK(result_is_free(outcome.plan.result, kCorner));
    CHECK(hamming_distance(m, outcome.plan.result) == 1);
}

TEST_CASE("min_edit_distance trivialities and rejections") {
    SymbolMatrix free_matrix = SymbolMatrix::constant(3, 3, 2, 1);
    EditOutcome outcome = min_edit_distance(free_matrix, kCorner);
    CHECK(outcome.exact);
    CHECK(outcome.plan.cost() == 0);
    CHECK(outcome.plan.result == free_matrix);

    CHECK_THROWS_AS(min_edit_distance(free_matrix, Pattern(2, 2, {1, 1, 1, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_edit_distance(free_matrix, Pattern(1, 2, {1, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_edit_distance(free_matrix, std::span<const Pattern>{}),
                    std::invalid_argument);
}

TEST_CASE("solver agrees with both oracles exhaustively at 2x3") {
    for (const Pattern& p : {kCorner, kDiagonal}) {
        for (int code = 0; code < 64; ++code) {
            std::vector<int> entries(6);
            for (int i = 0; i < 6; ++i) entries[i] = (code >> i & 1) + 1;
            SymbolMatrix m(2, 3, 2, entries);
            EditOutcome outcome = min_edit_distance(m, p);
            REQUIRE(outcome.exact);
            int brute = brute_force_min_edit(m, p);
            CAPTURE(code);
            CHECK(outcome.plan.cost() == brute);
            CHECK(brute == pt::ref_min_edit(m, p));
            CHECK(result_is_free(outcome.plan.result, p));
        }
    }
}

TEST_CASE("solver agrees with the independent oracle on random 3x4 instances") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        SymbolMatrix m = pt::random_matrix(rng, 3, 4, 2);
        const Pattern& p = trial % 2 ? kCorner : kDiagonal;
        EditOutcome outcome = min_edit_distance(m, p);
        REQUIRE(outcome.exact);
        CAPTURE(trial);
        CHECK(outcome.plan.cost() == pt::ref_min_edit(m, p));
    }
}

TEST_CASE("bracket sandwich on every instance where all three run") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        SymbolMatrix m = pt::random_matrix(rng, 3, 3, 2);
        const Pattern& p = trial % 2 ? kCorner : kDiagonal;
        std::size_t packing = pack_disjoint(OccurrenceQuery{p, m}).size();
        EditOutcome outcome = min_edit_distance(m, p);
        REQUIRE(outcome.exact);
        int merge_cost = merge_smallest_classes(m, p.num_classes()).cost();
        CHECK(static_cast<int>(packing) <= outcome.plan.cost());
        CHECK(outcome.plan.cost() <= merge_cost);
    }
}

TEST_CASE("zero budget yields an honest bracket") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        SymbolMatrix m = pt::random_matrix(rng, 4, 4, 2);
        SolverOptions bracket_only;
        bracket_only.node_budget = 0;
        EditOutcome bracketed = min_edit_distance(m, kCorner, bracket_only);
        EditOutcome exact = min_edit_distance(m, kCorner);
        REQUIRE(exact.exact);
        CHECK(bracketed.lower_bound <= exact.plan.cost());
        CHECK(exact.plan.cost() <= bracketed.upper_bound);
        if (!bracketed.exact) CHECK(bracketed.plan.cost() == bracketed.upper_bound);
        CHECK(result_is_free(bracketed.plan.result, kCorner));
    }
}

TEST_CASE("a starved budget is reported, never silently wrong") {
    std::mt19937 rng(73);
    SymbolMatrix m = pt::random_matrix(rng, 4, 4, 2);
    SolverOptions starved;
    starved.node_budget = 1;
    EditOutcome outcome = min_edit_distance(m, kCorner, starved);
    EditOutcome exact = min_edit_distance(m, kCorner);
    REQUIRE(exact.exact);
    if (!outcome.exact) {
        CHECK(outcome.lower_bound <= exact.plan.cost());
        CHECK(exact.plan.cost() <= outcome.upper_bound);
    } else {
        CHECK(outcome.plan.cost() == exact.plan.cost());
    }
}

TEST_CASE("exact cost is invariant under relabeling and permutations") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        SymbolMatrix m = pt::random_matrix(rng, 3, 3, 2);
        EditOutcome base = min_edit_distance(m, kDiagonal);
        REQUIRE(base.exact);

        SymbolMatrix relabeled = m.relabeled({0, 2, 1}, 2);
        EditOutcome swapped = min_edit_distance(relabeled, kDiagonal);
        REQUIRE(swapped.exact);
        CHECK(swapped.plan.cost() == base.plan.cost());

        SymbolMatrix shuffled =
            m.permuted(pt::random_permutation(rng, 3), pt::random_permutation(rng, 3));
        EditOutcome permuted = min_edit_distance(shuffled, kDiagonal);
        REQUIRE(permuted.exact);
        CHECK(permuted.plan.cost() == base.plan.cost());
    }
}

TEST_CASE("wildcard sets: destroying the expansion costs no more than one member") {
    Pattern wild(2, 2, {1, 2, 1, 0});
    std::vector<Pattern> expanded = expand_wildcards(wild);
    REQUIRE(expanded.size() == 3);
    Pattern fresh_member(2, 2, {1, 2, 1, 3});  // the all-distinct expansion

    std::mt19937 rng(83);
    for (int trial = 0; trial < 15; ++trial) {
        SymbolMatrix m = pt::random_matrix(rng, 3, 3, 3);
        EditOutcome all = min_edit_distance(m, std::span<const Pattern>(expanded));
        EditOutcome one = min_edit_distance(m, fresh_member);
        REQUIRE(all.exact);
        REQUIRE(one.exact);
        CHECK(all.plan.cost() >= one.plan.cost());
        for (const Pattern& p : expanded) CHECK(result_is_free(all.plan.result, p));
        CHECK(all.plan.cost() == pt::ref_min_edit(m, std::span<const Pattern>(expanded)));
    }
}

TEST_CASE("brute_force_min_edit basics and caps") {
    CHECK(brute_force_min_edit(SymbolMatrix::constant(2, 2, 2, 1), kCorner) == 0);
    CHECK(brute_force_min_edit(SymbolMatrix(2, 2, 2, {1, 1, 1, 2}), kCorner) == 1);

    CHECK_THROWS_AS(brute_force_min_edit(SymbolMatrix::constant(4, 4, 2, 1), kCorner),
                    std::invalid_argument);  // 16 cells > cap
    CHECK_THROWS_AS(brute_force_min_edit(SymbolMatrix::constant(2, 2, 4, 1), kCorner),
                    std::invalid_argument);  // 4 symbols > cap
    CHECK_THROWS_AS(brute_force_min_edit(SymbolMatrix::constant(2, 2, 2, 1),
                                         Pattern(1, 1, {1})),
                    std::invalid_argument);  // trivial pattern
}

TEST_CASE("extremal_f at 2x2 and 2x3 over two symbols") {
    ExtremalReport square = extremal_f(2, 2, 2, kCorner);
    CHECK(square.f_value == 1);
    CHECK(square.upper_bound == Rational(2));
    CHECK(Rational(square.f_value) <= square.upper_bound);
    CHECK(brute_force_min_edit(square.witness, kCorner) == square.f_value);

    ExtremalReport rect = extremal_f(2, 3, 2, kCorner);
    CHECK(rect.f_value == 1);
    CHECK(rect.upper_bound == Rational(3));
}

TEST_CASE("extremal_f is transpose-invariant") {
    // x / y versus x y: a genuinely asymmetric pattern and its transpose.
    CHECK(extremal_f(2, 3, 2, Pattern(2, 1, {1, 2})).f_value ==
          extremal_f(3, 2, 2, Pattern(1, 2, {1, 2})).f_value);
    // The corner and diagonal patterns are transpose-symmetric.
    CHECK(extremal_f(2, 3, 2, kCorner).f_value == extremal_f(3, 2, 2, kCorner).f_value);
    CHECK(extremal_f(2, 3, 2, kDiagonal).f_value == extremal_f(3, 2, 2, kDiagonal).f_value);
}

TEST_CASE("extremal_f rejections") {
    CHECK_THROWS_AS(extremal_f(2, 2, 2, Pattern(1, 1, {1})), std::invalid_argument);
    CHECK_THROWS_WITH(extremal_f(5, 5, 3, kCorner),
                      Catch::Matchers::ContainsSubstring("estimate_f_monte_carlo"));
}

TEST_CASE("extremal_f maximizes over all matrices, verified directly") {
    // Independent maximum: scan all 2^4 matrices without symmetry reduction.
    int expected = 0;
    for (int code = 0; code < 16; ++code) {
        std::vector<int> entries(4);
        for (int i = 0; i < 4; ++i) entries[i] = (code >> i & 1) + 1;
        expected = std::max(expected, pt::ref_min_edit(SymbolMatrix(2, 2, 2, entries), kCorner));
    }
    CHECK(extremal_f(2, 2, 2, kCorner).f_value == expected);
}

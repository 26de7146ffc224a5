// Monte Carlo probes of the extremal editing function on random colorings.
//
// Per trial: draw a seeded random coloring, bracket its edit distance to
// pattern-freedom (exact when the solver budget permits, otherwise
// [disjoint-packing lower, merge-heuristic upper]), and aggregate means per
// size. Trials derive independent sub-seeds from (seed, trial index), so a
// parallel schedule would produce the identical report.

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "patedit/editing.hpp"
#include "patedit/graphs.hpp"
#include "patedit/pattern.hpp"
#include "patedit/random.hpp"

namespace patedit {

struct ExperimentConfig {
    int m = 8;
    int n = 8;
    int s = 2;
    Pattern pattern{1, 2, {1, 2}};  // placeholder; callers set the real target
    int trials = 10;
    std::uint64_t seed = 1;
    std::uint64_t solver_budget = 0;            // 0 = pure bracket mode
    std::vector<std::pair<int, int>> sizes{};   // sweep sizes; empty = just (m, n)
};

struct TrendRow {
    int m;
    int n;
    long long sum_lower;  // integer sums, for exact bound checks
    long long sum_upper;
    double mean_lower;
    double mean_upper;
    int exact_count;
    double ratio_lower;  // mean_lower / (m n)
    double ratio_upper;
    Rational bound;      // (s - r + 1) / s
};

struct TrendReport {
    int s;
    int trials;
    std::uint64_t seed;
    std::uint64_t solver_budget;
    Pattern pattern;
    Rational bound;
    std::vector<TrendRow> rows;
};

inline TrendReport estimate_f_monte_carlo(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<Pattern> targets = cfg.pattern.has_wildcards()
                                       ? expand_wildcards(cfg.pattern)
                                       : std::vector<Pattern>{cfg.pattern};
    int r_min = targets[0].num_classes();
    for (const Pattern& p : targets) r_min = std::min(r_min, p.num_classes());
    Rational class_fraction(cfg.s - r_min + 1, cfg.s);

    std::vector<std::pair<int, int>> sizes =
        cfg.sizes.empty() ? std::vector<std::pair<int, int>>{{cfg.m, cfg.n}} : cfg.sizes;

    TrendReport report{cfg.s,  cfg.trials,     cfg.seed, cfg.solver_budget,
                       cfg.pattern, class_fraction, {}};
    std::uint64_t trial_index = 0;
    for (auto [m, n] : sizes) {
        TrendRow row{m, n, 0, 0, 0.0, 0.0, 0, 0.0, 0.0, class_fraction};
        for (int t = 0; t < cfg.trials; ++t, ++trial_index) {
            SymbolMatrix instance =
                random_coloring(m, n, cfg.s, derive_subseed(cfg.seed, trial_index));
            SolverOptions opts;
            opts.node_budget = cfg.solver_budget;
            EditOutcome outcome =
                min_edit_distance(instance, std::span<const Pattern>(targets), opts);
            row.sum_lower += outcome.lower_bound;
            row.sum_upper += outcome.upper_bound;
            if (outcome.exact) ++row.exact_count;
        }
        row.mean_lower = static_cast<double>(row.sum_lower) / cfg.trials;
        row.mean_upper = static_cast<double>(row.sum_upper) / cfg.trials;
        row.ratio_lower = row.mean_lower / (static_cast<double>(m) * n);
        row.ratio_upper = row.mean_upper / (static_cast<double>(m) * n);
        report.rows.push_back(row);
    }
    return report;
}

struct Corollary3Row {
    std::uint64_t seed;
    int total_targets;
    int occurred;
    int missing;
    std::vector<SymbolMatrix> missing_targets;
};

struct Corollary3Report {
    int m;
    int n;
    int s;
    int target_side;  // l: targets are all exact s-colorings of K_{l,l}
    std::vector<Corollary3Row> rows;
};

struct Corollary3Caps {
    int max_target_side = 2;
    int max_colors = 3;
};

// For each seed: generate a random coloring of K_{m,n} and check which of
// the s^(l*l) exact colorings of K_{l,l} occur in it.
inline Corollary3Report corollary3_sweep(int m, int n, int s, int target_side,
                                         std::span<const std::uint64_t> seeds,
                                         const Corollary3Caps& caps = {}) {
    if (target_side < 1 || target_side > caps.max_target_side)
        throw std::invalid_argument("target side exceeds cap " +
                                    std::to_string(caps.max_target_side));
    if (s < 1 || s > caps.max_colors)
        throw std::invalid_argument("color count exceeds cap " + std::to_string(caps.max_colors));
    if (seeds.empty()) throw std::invalid_argument("need at least one seed");

    const int cells = target_side * target_side;
    Corollary3Report report{m, n, s, target_side, {}};
    for (std::uint64_t seed : seeds) {
        ColoredPair host(random_coloring(m, n, s, seed));
        Corollary3Row row{seed, 0, 0, 0, {}};
        std::vector<int> assignment(cells, 1);
        for (;;) {
            ++row.total_targets;
            ColoredPair target(SymbolMatrix(target_side, target_side, s, assignment));
            if (coloring_occurs(host, target)) {
                ++row.occurred;
            } else {
                ++row.missing;
                row.missing_targets.push_back(target.as_matrix());
            }
            int pos = 0;
            while (pos < cells && assignment[pos] == s) assignment[pos++] = 1;
            if (pos == cells) break;
            ++assignment[pos];
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace patedit

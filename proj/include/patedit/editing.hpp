// Edit plans that destroy every occurrence of a target pattern (or of every
// member of an expanded wildcard set):
//
//   merge_smallest_classes  - rewrite the s-r+1 smallest symbol classes to
//                             the largest class's symbol; at most r-1
//                             distinct symbols remain, so no r-class pattern
//                             can occur. Cost <= ((s-r+1)/s) * mn.
//   min_edit_distance       - exact minimum via iterative deepening on cost.
//                             Every valid plan must edit some cell of every
//                             occurrence, so each node picks one occurrence
//                             and branches on rewriting each of its cells to
//                             each alternative symbol. A greedy disjoint
//                             packing prunes; the merge heuristic caps the
//                             deepening. A blown node budget yields an
//                             inexact bracketed verdict, never a wrong exact
//                             claim.
//   brute_force_min_edit    - independent oracle: enumerate every matrix
//                             over the alphabet and take the minimum Hamming
//                             distance to a pattern-free one.
//   extremal_f              - exhaustive worst case of the edit distance
//                             over all matrices at tiny scale, with symmetry
//                             reduction (row/col permutations and symbol
//                             bijections preserve the distance).

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "patedit/containment.hpp"
#include "patedit/matrix.hpp"
#include "patedit/pattern.hpp"
#include "patedit/rational.hpp"

namespace patedit {

struct CellEdit {
    int row;
    int col;
    int new_symbol;

    friend bool operator==(const CellEdit&, const CellEdit&) = default;
};

struct EditPlan {
    std::vector<CellEdit> edits;  // distinct cells
    SymbolMatrix result;

    int cost() const { return static_cast<int>(edits.size()); }
};

// Exact when lower_bound == upper_bound == plan.cost(); otherwise plan is
// the best heuristic plan found and the true optimum lies in the bracket.
struct EditOutcome {
    EditPlan plan;
    bool exact;
    int lower_bound;
    int upper_bound;
    std::uint64_t nodes_expanded;
};

struct SolverOptions {
    std::uint64_t node_budget = 1u << 20;
    InjectionMode mode = InjectionMode::unordered;
    int max_pattern_dim = 4;
};

inline Rational theoretical_bound(long long m, long long n, long long s, long long r) {
    if (m < 1 || n < 1) throw std::invalid_argument("dimensions must be positive");
    if (r < 1 || r > s) throw std::invalid_argument("need 1 <= r <= s");
    return Rational(s - r + 1, s) * Rational(m * n);
}

inline EditPlan merge_smallest_classes(const SymbolMatrix& m, int target_classes) {
    const int s = m.max_symbols();
    if (target_classes < 1 || target_classes > s)
        throw std::invalid_argument("target class count must be in 1..s");

    // Class sizes range over the full alphabet; absent symbols are empty
    // classes and merging them is free. Ties break toward the smaller id.
    std::vector<long long> hist = m.symbol_histogram();
    int largest = 1;
    for (int v = 2; v <= s; ++v)
        if (hist[v] > hist[largest]) largest = v;

    std::vector<int> others;
    for (int v = 1; v <= s; ++v)
        if (v != largest) others.push_back(v);
    std::stable_sort(others.begin(), others.end(),
                     [&](int a, int b) { return hist[a] < hist[b]; });

    int merge_count = std::min<int>(s - target_classes + 1, static_cast<int>(others.size()));
    std::vector<char> merged(static_cast<std::size_t>(s) + 1, 0);
    for (int i = 0; i < merge_count; ++i) merged[others[i]] = 1;

    EditPlan plan{{}, m};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (merged[m.at(i, j)]) {
                plan.edits.push_back({i, j, largest});
                plan.result.set(i, j, largest);
            }
    return plan;
}

namespace detail {

inline void validate_edit_targets(std::span<const Pattern> patterns) {
    if (patterns.empty()) throw std::invalid_argument("no target patterns");
    for (const Pattern& p : patterns) {
        if (p.has_wildcards())
            throw std::invalid_argument("expand wildcard patterns before editing");
        if (p.num_classes() < 2)
            throw std::invalid_argument(
                "trivial pattern: a pattern-free matrix may not exist, refusing");
    }
}

inline std::optional<Occurrence> find_any(const SymbolMatrix& m, std::span<const Pattern> patterns,
                                          InjectionMode mode, std::size_t& which) {
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        std::optional<Occurrence> found;
        search_occurrences(patterns[pi], m, mode, [&](const Occurrence& occ) {
            found = occ;
            return false;
        });
        if (found) {
            which = pi;
            return found;
        }
    }
    return std::nullopt;
}

struct PackedOccurrence {
    Occurrence occ;
    std::size_t pattern_index;
};

// Greedy cell-disjoint packing across a whole pattern set.
inline std::vector<PackedOccurrence> pack_disjoint_multi(const SymbolMatrix& m,
                                                         std::span<const Pattern> patterns,
                                                         InjectionMode mode) {
    std::vector<char> used(static_cast<std::size_t>(m.rows()) * m.cols(), 0);
    std::vector<PackedOccurrence> out;
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        search_occurrences(patterns[pi], m, mode, [&](const Occurrence& occ) {
            for (int i : occ.row_map)
                for (int j : occ.col_map)
                    if (used[static_cast<std::size_t>(i) * m.cols() + j]) return true;
            for (int i : occ.row_map)
                for (int j : occ.col_map)
                    used[static_cast<std::size_t>(i) * m.cols() + j] = 1;
            out.push_back({occ, pi});
            return true;
        });
    }
    return out;
}

class EditSearch {
public:
    EditSearch(const SymbolMatrix& m, std::span<const Pattern> patterns, const SolverOptions& opts)
        : work_(m), patterns_(patterns), opts_(opts),
          frozen_(static_cast<std::size_t>(m.rows()) * m.cols(), 0) {}

    enum class Status { found, not_found, budget };

    Status run(int depth, std::vector<CellEdit>& plan_out) {
        path_.clear();
        Status st = dfs(depth);
        if (st == Status::found) plan_out = path_;
        return st;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    Status dfs(int remaining) {
        if (++nodes_ > opts_.node_budget) return Status::budget;

        std::size_t which = 0;
        std::optional<Occurrence> occ = find_any(work_, patterns_, opts_.mode, which);
        if (!occ) return Status::found;
        if (remaining == 0) return Status::not_found;

        // Disjoint surviving occurrences each need an edit in their own
        // cells; one made entirely of frozen cells can never be destroyed.
        auto packed = pack_disjoint_multi(work_, patterns_, opts_.mode);
        int needed = 0;
        for (const PackedOccurrence& po : packed) {
            bool editable = false;
            for (int i : po.occ.row_map)
                for (int j : po.occ.col_map)
                    if (!frozen_[cell(i, j)]) editable = true;
            if (!editable) return Status::not_found;
            ++needed;
        }
        if (needed > remaining) return Status::not_found;

        for (int i : occ->row_map) {
            for (int j : occ->col_map) {
                if (frozen_[cell(i, j)]) continue;
                int original = work_.at(i, j);
                frozen_[cell(i, j)] = 1;
                for (int v = 1; v <= work_.max_symbols(); ++v) {
                    if (v == original) continue;
                    work_.set(i, j, v);
                    path_.push_back({i, j, v});
                    Status st = dfs(remaining - 1);
                    if (st == Status::found) return st;  // path_ holds the full plan
                    path_.pop_back();
                    if (st == Status::budget) {
                        work_.set(i, j, original);
                        frozen_[cell(i, j)] = 0;
                        return st;
                    }
                }
                work_.set(i, j, original);
                frozen_[cell(i, j)] = 0;
            }
        }
        return Status::not_found;
    }

    std::size_t cell(int i, int j) const { return static_cast<std::size_t>(i) * work_.cols() + j; }

    SymbolMatrix work_;
    std::span<const Pattern> patterns_;
    SolverOptions opts_;
    std::vector<char> frozen_;
    std::vector<CellEdit> path_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline EditOutcome min_edit_distance(const SymbolMatrix& m, std::span<const Pattern> patterns,
                                     const SolverOptions& opts = {}) {
    detail::validate_edit_targets(patterns);

    std::size_t which = 0;
    if (!detail::find_any(m, patterns, opts.mode, which))
        return {EditPlan{{}, m}, true, 0, 0, 0};

    int r_min = patterns[0].num_classes();
    for (const Pattern& p : patterns) r_min = std::min(r_min, p.num_classes());
    EditPlan heuristic = merge_smallest_classes(m, r_min);
    const int upper = heuristic.cost();
    const int packing_bound =
        static_cast<int>(detail::pack_disjoint_multi(m, patterns, opts.mode).size());

    if (packing_bound >= upper)
        return {std::move(heuristic), true, upper, upper, 0};

    detail::EditSearch search(m, patterns, opts);
    if (opts.node_budget == 0)
        return {std::move(heuristic), false, packing_bound, upper, 0};

    for (int depth = packing_bound; depth < upper; ++depth) {
        std::vector<CellEdit> edits;
        auto st = search.run(depth, edits);
        if (st == detail::EditSearch::Status::budget) {
            // Depths below `depth` were refuted completely.
            int lower = std::max(packing_bound, depth);
            return {std::move(heuristic), false, lower, upper, search.nodes()};
        }
        if (st == detail::EditSearch::Status::found) {
            SymbolMatrix result = m;
            for (const CellEdit& e : edits) result.set(e.row, e.col, e.new_symbol);
            return {EditPlan{std::move(edits), std::move(result)}, true, depth, depth,
                    search.nodes()};
        }
    }
    // Every depth below the heuristic cost was refuted: the heuristic is optimal.
    return {std::move(heuristic), true, upper, upper, search.nodes()};
}

inline EditOutcome min_edit_distance(const SymbolMatrix& m, const Pattern& pattern,
                                     const SolverOptions& opts = {}) {
    return min_edit_distance(m, std::span<const Pattern>(&pattern, 1), opts);
}

struct BruteForceCaps {
    int max_cells = 12;
    int max_symbols = 3;
};

inline int brute_force_min_edit(const SymbolMatrix& m, std::span<const Pattern> patterns,
                                const BruteForceCaps& caps = {},
                                InjectionMode mode = InjectionMode::unordered) {
    detail::validate_edit_targets(patterns);
    const int cells = m.rows() * m.cols();
    const int s = m.max_symbols();
    if (cells > caps.max_cells)
        throw std::invalid_argument("matrix exceeds brute force cap of " +
                                    std::to_string(caps.max_cells) + " cells");
    if (s > caps.max_symbols)
        throw std::invalid_argument("alphabet exceeds brute force cap of " +
                                    std::to_string(caps.max_symbols) + " symbols");

    std::vector<int> assignment(cells, 1);
    int best = cells + 1;
    for (;;) {
        int dist = 0;
        for (int i = 0; i < cells; ++i)
            if (assignment[i] != m.entries()[i]) ++dist;
        if (dist < best) {
            SymbolMatrix candidate(m.rows(), m.cols(), s, assignment);
            bool free_of_all = true;
            for (const Pattern& p : patterns) {
                bool found = false;
                detail::search_occurrences(p, candidate, mode, [&](const Occurrence&) {
                    found = true;
                    return false;
                });
                if (found) {
                    free_of_all = false;
                    break;
                }
            }
            if (free_of_all) best = dist;
        }
        int pos = 0;
        while (pos < cells && assignment[pos] == s) assignment[pos++] = 1;
        if (pos == cells) break;
        ++assignment[pos];
    }
    if (best > cells)
        throw std::runtime_error("no pattern-free matrix exists at this size");
    return best;
}

inline int brute_force_min_edit(const SymbolMatrix& m, const Pattern& pattern,
                                const BruteForceCaps& caps = {},
                                InjectionMode mode = InjectionMode::unordered) {
    return brute_force_min_edit(m, std::span<const Pattern>(&pattern, 1), caps, mode);
}

struct ExtremalReport {
    int m;
    int n;
    int s;
    Pattern pattern;
    int f_value;
    SymbolMatrix witness;
    Rational upper_bound;
};

struct ExtremalOptions {
    long long enumeration_budget = 2000000;  // cap on s^(mn)
    BruteForceCaps caps{};
    InjectionMode mode = InjectionMode::unordered;
};

namespace detail {

// First-occurrence relabeling: the canonical representative of a matrix
// under symbol bijections.
inline std::vector<int> relabel_first_occurrence(const std::vector<int>& entries, int s) {
    std::vector<int> map(static_cast<std::size_t>(s) + 1, 0);
    std::vector<int> out(entries.size());
    int next = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        int v = entries[i];
        if (map[v] == 0) map[v] = ++next;
        out[i] = map[v];
    }
    return out;
}

// Lexicographically minimal entry vector over row perms x col perms x
// symbol bijections.
inline std::vector<int> canonical_entries(const SymbolMatrix& m) {
    std::vector<int> row_perm(m.rows()), col_perm(m.cols());
    std::iota(row_perm.begin(), row_perm.end(), 0);
    std::vector<int> best;
    do {
        std::iota(col_perm.begin(), col_perm.end(), 0);
        do {
            std::vector<int> cand =
                relabel_first_occurrence(m.permuted(row_perm, col_perm).entries(), m.max_symbols());
            if (best.empty() || cand < best) best = std::move(cand);
        } while (std::next_permutation(col_perm.begin(), col_perm.end()));
    } while (std::next_permutation(row_perm.begin(), row_perm.end()));
    return best;
}

}  // namespace detail

// Exhaustive worst case of the edit distance over all m x n matrices with
// at most s distinct entries, maximizing over one representative per orbit
// of row perms x col perms x symbol bijections (all preserve the distance).
inline ExtremalReport extremal_f(int m, int n, int s, const Pattern& pattern,
                                 const ExtremalOptions& opts = {}) {
    std::vector<Pattern> targets =
        pattern.has_wildcards() ? expand_wildcards(pattern) : std::vector<Pattern>{pattern};
    for (const Pattern& p : targets)
        if (p.num_classes() < 2)
            throw std::invalid_argument(
                "trivial pattern: Forb may be empty, extremal value undefined");

    long long total = 1;
    for (int i = 0; i < m * n; ++i) {
        total *= s;
        if (total > opts.enumeration_budget)
            throw std::invalid_argument(
                "s^(mn) exceeds enumeration budget; use estimate_f_monte_carlo instead");
    }

    int best = -1;
    std::optional<SymbolMatrix> witness;
    std::vector<int> assignment(static_cast<std::size_t>(m) * n, 1);
    for (;;) {
        SymbolMatrix candidate(m, n, s, assignment);
        if (detail::canonical_entries(candidate) == assignment) {
            int d = brute_force_min_edit(candidate, std::span<const Pattern>(targets), opts.caps,
                                         opts.mode);
            if (d > best) {
                best = d;
                witness = candidate;
            }
        }
        std::size_t pos = 0;
        while (pos < assignment.size() && assignment[pos] == s) assignment[pos++] = 1;
        if (pos == assignment.size()) break;
        ++assignment[pos];
    }

    int r_min = targets[0].num_classes();
    for (const Pattern& p : targets) r_min = std::min(r_min, p.num_classes());
    Rational bound = theoretical_bound(m, n, s, r_min);

    // Certify the witness value with the exact solver.
    SolverOptions certify;
    certify.mode = opts.mode;
    EditOutcome check = min_edit_distance(*witness, std::span<const Pattern>(targets), certify);
    if (!check.exact || check.plan.cost() != best)
        throw std::logic_error("extremal witness failed exact-solver certification");
    if (Rational(best) > bound)
        throw std::logic_error("extremal value exceeds theoretical bound");

    return {m, n, s, pattern, best, *witness, bound};
}

}  // namespace patedit

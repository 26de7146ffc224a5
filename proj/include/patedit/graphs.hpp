// The edge-colored bipartite view of a symbol matrix: rows are left
// vertices, columns are right vertices, entry (i, j) is the color of edge
// {i, j}. The translation is content-identical in both directions, so every
// containment or editing question can be asked through either view.
//
// Also here: per-color densities and neighborhoods, epsilon-regularity
// checking of a pair in a color (exhaustive at small sizes, sampled
// beyond), and exact-coloring occurrence (colors must match literally, as
// opposed to pattern containment which allows a class -> symbol bijection).

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "patedit/matrix.hpp"
#include "patedit/random.hpp"
#include "patedit/rational.hpp"

namespace patedit {

class ColoredPair {
public:
    explicit ColoredPair(SymbolMatrix edges) : edges_(std::move(edges)) {}

    int left_size() const { return edges_.rows(); }
    int right_size() const { return edges_.cols(); }
    int num_colors() const { return edges_.max_symbols(); }
    int color(int left_vertex, int right_vertex) const { return edges_.at(left_vertex, right_vertex); }
    const SymbolMatrix& as_matrix() const { return edges_; }

    friend bool operator==(const ColoredPair&, const ColoredPair&) = default;

private:
    SymbolMatrix edges_;
};

inline ColoredPair to_coloring(const SymbolMatrix& m) { return ColoredPair(m); }
inline SymbolMatrix to_matrix(const ColoredPair& c) { return c.as_matrix(); }

namespace detail {

inline void validate_subset(std::span<const int> subset, int side_size, const char* side) {
    if (subset.empty()) throw std::invalid_argument(std::string(side) + " subset is empty");
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || subset[i] >= side_size)
            throw std::invalid_argument(std::string(side) + " subset vertex out of range");
        if (i > 0 && subset[i] <= subset[i - 1])
            throw std::invalid_argument(std::string(side) + " subset must be strictly increasing");
    }
}

inline void validate_color(int color, int num_colors) {
    if (color < 1 || color > num_colors) throw std::invalid_argument("color out of range");
}

}  // namespace detail

// d_color(X', Y') = |edges of the color between X' and Y'| / (|X'| |Y'|),
// exact. Densities over a fixed subset pair sum to 1 across colors.
inline Rational color_density(const ColoredPair& c, int color, std::span<const int> left_subset,
                              std::span<const int> right_subset) {
    detail::validate_color(color, c.num_colors());
    detail::validate_subset(left_subset, c.left_size(), "left");
    detail::validate_subset(right_subset, c.right_size(), "right");
    long long count = 0;
    for (int i : left_subset)
        for (int j : right_subset)
            if (c.color(i, j) == color) ++count;
    return Rational(count, static_cast<long long>(left_subset.size()) * right_subset.size());
}

enum class Side { left, right };

// Vertices on the opposite side joined to `vertex` by edges of the color.
inline std::vector<int> neighborhood(const ColoredPair& c, Side side, int vertex, int color) {
    detail::validate_color(color, c.num_colors());
    int own = side == Side::left ? c.left_size() : c.right_size();
    if (vertex < 0 || vertex >= own) throw std::invalid_argument("vertex out of range");
    std::vector<int> out;
    int opposite = side == Side::left ? c.right_size() : c.left_size();
    for (int u = 0; u < opposite; ++u) {
        int col = side == Side::left ? c.color(vertex, u) : c.color(u, vertex);
        if (col == color) out.push_back(u);
    }
    return out;
}

enum class RegularityMethod { exhaustive, sampled };

struct RegularityWitness {
    std::vector<int> left_subset;   // strictly increasing, 0-based
    std::vector<int> right_subset;
    Rational density;
};

struct RegularityVerdict {
    int color;
    Rational epsilon;
    Rational global_density;
    bool regular;
    RegularityMethod method;
    std::optional<RegularityWitness> witness;  // a violating pair when irregular
    std::uint64_t samples;                     // 0 for exhaustive

    // A sampled "regular" only means no violation was sampled; a witness is
    // a proof either way.
    bool definitive() const { return method == RegularityMethod::exhaustive || !regular; }
};

struct RegularityOptions {
    RegularityMethod method = RegularityMethod::exhaustive;
    std::uint64_t sample_budget = 1000;
    std::uint64_t seed = 0;
    int exhaustive_cap = 16;  // on left_size + right_size: 2^(m+n) subset pairs
};

namespace detail {

inline std::vector<int> mask_to_subset(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1u) out.push_back(v);
    return out;
}

// Smallest subset size t with t >= epsilon * side, computed exactly.
inline int regularity_threshold(const Rational& epsilon, int side) {
    long long num = epsilon.numerator() * side;
    long long den = epsilon.denominator();
    return static_cast<int>((num + den - 1) / den);
}

}  // namespace detail

// Is the pair epsilon-regular in the color: does every subset pair of
// relative size >= epsilon have color density within epsilon of the global
// density? Exhaustive verdicts are definitive; the sampled method proves
// irregularity when it finds a violation but can only report "no violation
// sampled" otherwise.
inline RegularityVerdict is_epsilon_regular(const ColoredPair& c, int color,
                                            const Rational& epsilon,
                                            const RegularityOptions& opts = {}) {
    detail::validate_color(color, c.num_colors());
    if (epsilon <= Rational(0) || epsilon >= Rational(1))
        throw std::invalid_argument("epsilon must lie in (0,1)");

    const int m = c.left_size(), n = c.right_size();
    long long total = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (c.color(i, j) == color) ++total;
    const Rational global(total, static_cast<long long>(m) * n);

    const int tx = std::max(1, detail::regularity_threshold(epsilon, m));
    const int ty = std::max(1, detail::regularity_threshold(epsilon, n));

    auto violation = [&](std::span<const int> xs, std::span<const int> ys)
        -> std::optional<Rational> {
        long long count = 0;
        for (int i : xs)
            for (int j : ys)
                if (c.color(i, j) == color) ++count;
        Rational density(count, static_cast<long long>(xs.size()) * ys.size());
        if (rational_abs(global - density) >= epsilon) return density;
        return std::nullopt;
    };

    if (opts.method == RegularityMethod::exhaustive) {
        if (m + n > opts.exhaustive_cap)
            throw std::invalid_argument("pair too large for exhaustive check; use sampled");
        // Row bitmasks over columns for the color make subset counting cheap.
        std::vector<std::uint32_t> row_mask(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (c.color(i, j) == color) row_mask[i] |= 1u << j;
        for (std::uint32_t xm = 1; xm < (1u << m); ++xm) {
            int xs = __builtin_popcount(xm);
            if (xs < tx) continue;
            for (std::uint32_t ym = 1; ym < (1u << n); ++ym) {
                int ys = __builtin_popcount(ym);
                if (ys < ty) continue;
                long long count = 0;
                for (int i = 0; i < m; ++i)
                    if (xm & (1u << i)) count += __builtin_popcount(row_mask[i] & ym);
                Rational density(count, static_cast<long long>(xs) * ys);
                if (rational_abs(global - density) >= epsilon) {
                    return {color,  epsilon,
                            global, false,
                            RegularityMethod::exhaustive,
                            RegularityWitness{detail::mask_to_subset(xm), detail::mask_to_subset(ym),
                                              density},
                            0};
                }
            }
        }
        return {color, epsilon, global, true, RegularityMethod::exhaustive, std::nullopt, 0};
    }

    if (opts.sample_budget < 1) throw std::invalid_argument("sample budget must be >= 1");
    SplitMix64 rng(opts.seed);
    // Size drawn uniformly over qualifying sizes first, then a uniform
    // subset of that size; this avoids biasing toward half-size subsets.
    auto draw_subset = [&](int side, int threshold) {
        int size = threshold + static_cast<int>(rng.below(static_cast<std::uint64_t>(side - threshold + 1)));
        std::vector<int> all(side);
        std::iota(all.begin(), all.end(), 0);
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(side - i)));
            std::swap(all[i], all[j]);
        }
        std::vector<int> subset(all.begin(), all.begin() + size);
        std::sort(subset.begin(), subset.end());
        return subset;
    };
    for (std::uint64_t trial = 0; trial < opts.sample_budget; ++trial) {
        std::vector<int> xs = draw_subset(m, tx);
        std::vector<int> ys = draw_subset(n, ty);
        if (auto density = violation(xs, ys)) {
            return {color,   epsilon,
                    global,  false,
                    RegularityMethod::sampled,
                    RegularityWitness{std::move(xs), std::move(ys), *density},
                    trial + 1};
        }
    }
    return {color,   epsilon,          global, true, RegularityMethod::sampled,
            std::nullopt, opts.sample_budget};
}

// Does the target coloring occur literally inside the host: side-respecting
// injections under which every edge keeps its exact color. Stricter than
// pattern containment (no class -> symbol bijection).
inline bool coloring_occurs(const ColoredPair& host, const ColoredPair& target) {
    const int k = target.left_size(), l = target.right_size();
    const int m = host.left_size(), n = host.right_size();
    if (k > m || l > n) return false;

    std::vector<int> row_map(k), col_map(l);
    std::vector<char> row_used(m, 0), col_used(n, 0);

    auto choose_col = [&](auto&& self, int b) -> bool {
        if (b == l) return true;
        for (int j = 0; j < n; ++j) {
            if (col_used[j]) continue;
            bool ok = true;
            for (int a = 0; a < k; ++a)
                if (host.color(row_map[a], j) != target.color(a, b)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col_used[j] = 1;
            col_map[b] = j;
            if (self(self, b + 1)) return true;
            col_used[j] = 0;
        }
        return false;
    };
    auto choose_row = [&](auto&& self, int a) -> bool {
        if (a == k) return choose_col(choose_col, 0);
        for (int i = 0; i < m; ++i) {
            if (row_used[i]) continue;
            row_used[i] = 1;
            row_map[a] = i;
            if (self(self, a + 1)) return true;
            row_used[i] = 0;
        }
        return false;
    };
    return choose_row(choose_row, 0);
}

}  // namespace patedit

// Patterns: partitions of a k x l index grid into nonempty classes, plus
// optional wildcard cells. A matrix has a pattern when entries are equal
// exactly within classes; a wildcard cell matches anything.
//
// Canonical form relabels classes by first occurrence in row-major order,
// so two patterns describe the same partition iff their canonical cell
// grids are identical. pattern_of() produces canonical output directly.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "patedit/matrix.hpp"

namespace patedit {

class Pattern {
public:
    // Cell value 0 marks a wildcard; values 1..r are class ids.
    static constexpr int wildcard = 0;

    Pattern(int rows, int cols, std::vector<int> cells)
        : rows_(rows), cols_(cols), cells_(std::move(cells)) {
        if (rows_ < 1 || cols_ < 1)
            throw std::invalid_argument("pattern dimensions must be positive");
        if (cells_.size() != static_cast<std::size_t>(rows_) * cols_)
            throw std::invalid_argument("cell count does not match dimensions");
        int max_class = 0;
        for (int c : cells_) {
            if (c < 0) throw std::invalid_argument("negative class id");
            max_class = std::max(max_class, c);
        }
        num_classes_ = max_class;
        std::vector<char> seen(static_cast<std::size_t>(max_class) + 1, 0);
        for (int c : cells_) seen[c] = 1;
        for (int t = 1; t <= max_class; ++t)
            if (!seen[t])
                throw std::invalid_argument("class " + std::to_string(t) + " is empty");
        // num_classes == 0 is permitted only for the all-wildcard pattern,
        // which exists purely as expansion input.
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_classes() const { return num_classes_; }
    const std::vector<int>& cells() const { return cells_; }

    int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * cols_ + j]; }

    int wildcard_count() const {
        int w = 0;
        for (int c : cells_)
            if (c == wildcard) ++w;
        return w;
    }

    bool has_wildcards() const { return wildcard_count() > 0; }

    friend bool operator==(const Pattern&, const Pattern&) = default;
    friend auto operator<=>(const Pattern&, const Pattern&) = default;

private:
    int rows_;
    int cols_;
    int num_classes_;
    std::vector<int> cells_;
};

// Relabels class ids by first occurrence in row-major scan; wildcards are
// untouched. Idempotent.
inline Pattern canonicalize(const Pattern& p) {
    std::vector<int> relabel(static_cast<std::size_t>(p.num_classes()) + 1, 0);
    std::vector<int> out(p.cells().size());
    int next_id = 0;
    for (std::size_t i = 0; i < p.cells().size(); ++i) {
        int c = p.cells()[i];
        if (c == Pattern::wildcard) {
            out[i] = Pattern::wildcard;
            continue;
        }
        if (relabel[c] == 0) relabel[c] = ++next_id;
        out[i] = relabel[c];
    }
    return Pattern(p.rows(), p.cols(), std::move(out));
}

// The partition of a matrix's cells by entry equality, in canonical form.
inline Pattern pattern_of(const SymbolMatrix& m) {
    std::vector<int> class_of_symbol(static_cast<std::size_t>(m.max_symbols()) + 1, 0);
    std::vector<int> cells(m.entries().size());
    int next_id = 0;
    for (std::size_t i = 0; i < m.entries().size(); ++i) {
        int v = m.entries()[i];
        if (class_of_symbol[v] == 0) class_of_symbol[v] = ++next_id;
        cells[i] = class_of_symbol[v];
    }
    return Pattern(m.rows(), m.cols(), std::move(cells));
}

inline bool same_pattern(const SymbolMatrix& a, const SymbolMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch");
    return pattern_of(a) == pattern_of(b);
}

// The witnessing bijection g from a's symbols to b's symbols when the
// patterns agree.
inline std::optional<std::map<int, int>> pattern_bijection(const SymbolMatrix& a,
                                                           const SymbolMatrix& b) {
    if (!same_pattern(a, b)) return std::nullopt;
    std::map<int, int> g;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        g[a.entries()[i]] = b.entries()[i];
    return g;
}

// Triviality is defined for concrete patterns only.
inline bool is_trivial(const Pattern& p) {
    if (p.has_wildcards())
        throw std::invalid_argument("triviality is undefined for wildcard patterns");
    return p.num_classes() == 1;
}

// All concrete patterns obtained by assigning each wildcard cell to an
// existing class or to a fresh one, with fresh classes shared or distinct
// among wildcard cells in every way. Fresh-class choices are enumerated as
// restricted growth strings, so each cell partition appears once; results
// are still deduplicated by canonical form.
inline std::vector<Pattern> expand_wildcards(const Pattern& p, int max_wildcards = 8) {
    std::vector<std::size_t> holes;
    for (std::size_t i = 0; i < p.cells().size(); ++i)
        if (p.cells()[i] == Pattern::wildcard) holes.push_back(i);
    if (holes.empty()) return {canonicalize(p)};
    if (static_cast<int>(holes.size()) > max_wildcards)
        throw std::invalid_argument("pattern has " + std::to_string(holes.size()) +
                                    " wildcards, limit is " + std::to_string(max_wildcards));

    int r = p.num_classes();
    std::set<Pattern> out;
    std::vector<int> cells = p.cells();
    auto rec = [&](auto&& self, std::size_t idx, int fresh_used) -> void {
        if (idx == holes.size()) {
            out.insert(canonicalize(Pattern(p.rows(), p.cols(), cells)));
            return;
        }
        for (int c = 1; c <= r + fresh_used + 1; ++c) {
            cells[holes[idx]] = c;
            self(self, idx + 1, std::max(fresh_used, c - r));
        }
        cells[holes[idx]] = Pattern::wildcard;
    };
    rec(rec, 0, 0);
    return std::vector<Pattern>(out.begin(), out.end());
}

}  // namespace patedit

// Occurrence search: does a pattern occur inside a symbol matrix, and where.
//
// An occurrence is a triple of injections (pattern rows -> matrix rows,
// pattern cols -> matrix cols, classes -> symbols) such that every
// non-wildcard pattern cell lands on its class's symbol. Injectivity of the
// class map enforces the cross-class inequality during the search rather
// than as a post-filter.
//
// Backtracking order: pattern rows outermost, then pattern columns, binding
// class -> symbol lazily on first touch. Candidates are tried in ascending
// index order, so occurrences are visited in lexicographic (row_map,
// col_map) order; class_symbol is determined by the cell values.

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "patedit/matrix.hpp"
#include "patedit/pattern.hpp"

namespace patedit {

struct Occurrence {
    std::vector<int> row_map;       // pattern row -> matrix row (0-based)
    std::vector<int> col_map;       // pattern col -> matrix col (0-based)
    std::vector<int> class_symbol;  // class t -> symbol, at index t-1

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

enum class InjectionMode {
    unordered,  // arbitrary injections (default; a pattern forbids all its reflections)
    ordered,    // order-preserving injections only
};

struct OccurrenceQuery {
    Pattern pattern;
    SymbolMatrix matrix;
    std::optional<std::size_t> limit{};  // cap on enumeration
    InjectionMode mode = InjectionMode::unordered;
    // Search cost grows steeply with pattern size; raise explicitly when a
    // larger pattern is intended (e.g. whole-matrix self containment).
    int max_pattern_dim = 4;
};

// Direct re-check of an occurrence against the matrix: cell equalities,
// injectivity of all three maps, cross-class inequality.
inline bool verify_occurrence(const Pattern& p, const SymbolMatrix& m, const Occurrence& occ) {
    if (occ.row_map.size() != static_cast<std::size_t>(p.rows()) ||
        occ.col_map.size() != static_cast<std::size_t>(p.cols()) ||
        occ.class_symbol.size() != static_cast<std::size_t>(p.num_classes()))
        return false;
    auto injective = [](const std::vector<int>& v, int lo, int hi) {
        std::vector<char> used(static_cast<std::size_t>(hi) + 1, 0);
        for (int x : v) {
            if (x < lo || x > hi || used[x]) return false;
            used[x] = 1;
        }
        return true;
    };
    if (!injective(occ.row_map, 0, m.rows() - 1)) return false;
    if (!injective(occ.col_map, 0, m.cols() - 1)) return false;
    if (!injective(occ.class_symbol, 1, m.max_symbols())) return false;
    for (int a = 0; a < p.rows(); ++a)
        for (int b = 0; b < p.cols(); ++b) {
            int t = p.at(a, b);
            if (t == Pattern::wildcard) continue;
            if (m.at(occ.row_map[a], occ.col_map[b]) != occ.class_symbol[t - 1]) return false;
        }
    return true;
}

namespace detail {

// Visits occurrences in lexicographic order; visitor returns false to stop.
// Returns false when the visitor stopped the search.
inline bool search_occurrences(const Pattern& p, const SymbolMatrix& m, InjectionMode mode,
                               const std::function<bool(const Occurrence&)>& visit) {
    const int k = p.rows(), l = p.cols();
    const int mr = m.rows(), mc = m.cols();
    if (k > mr || l > mc) return true;
    // An occurrence needs num_classes distinct symbols in the matrix.
    if (m.distinct_symbols() < p.num_classes()) return true;

    std::vector<int> row_map(k), col_map(l);
    std::vector<char> row_used(mr, 0), col_used(mc, 0);
    std::vector<int> class_symbol(static_cast<std::size_t>(p.num_classes()) + 1, 0);
    std::vector<int> symbol_class(static_cast<std::size_t>(m.max_symbols()) + 1, 0);

    auto choose_col = [&](auto&& self, int b) -> bool {
        if (b == l) {
            Occurrence occ;
            occ.row_map = row_map;
            occ.col_map = col_map;
            occ.class_symbol.assign(class_symbol.begin() + 1, class_symbol.end());
            return visit(occ);
        }
        int start = (mode == InjectionMode::ordered && b > 0) ? col_map[b - 1] + 1 : 0;
        for (int j = start; j < mc; ++j) {
            if (col_used[j]) continue;
            std::vector<int> bound;  // classes bound while placing this column
            bool ok = true;
            for (int a = 0; a < k; ++a) {
                int t = p.at(a, b);
                if (t == Pattern::wildcard) continue;
                int v = m.at(row_map[a], j);
                if (class_symbol[t] == 0) {
                    if (symbol_class[v] != 0) {
                        ok = false;  // symbol already owned by another class
                        break;
                    }
                    class_symbol[t] = v;
                    symbol_class[v] = t;
                    bound.push_back(t);
                } else if (class_symbol[t] != v) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                col_used[j] = 1;
                col_map[b] = j;
                bool keep_going = self(self, b + 1);
                col_used[j] = 0;
                if (!keep_going) {
                    for (int t : bound) {
                        symbol_class[class_symbol[t]] = 0;
                        class_symbol[t] = 0;
                    }
                    return false;
                }
            }
            for (int t : bound) {
                symbol_class[class_symbol[t]] = 0;
                class_symbol[t] = 0;
            }
        }
        return true;
    };

    auto choose_row = [&](auto&& self, int a) -> bool {
        if (a == k) return choose_col(choose_col, 0);
        int start = (mode == InjectionMode::ordered && a > 0) ? row_map[a - 1] + 1 : 0;
        for (int i = start; i < mr; ++i) {
            if (row_used[i]) continue;
            row_used[i] = 1;
            row_map[a] = i;
            bool keep_going = self(self, a + 1);
            row_used[i] = 0;
            if (!keep_going) return false;
        }
        return true;
    };

    return choose_row(choose_row, 0);
}

inline void validate_query(const OccurrenceQuery& q) {
    if (q.pattern.has_wildcards())
        throw std::invalid_argument(
            "pattern has wildcards; expand with expand_wildcards() and query each member");
    if (q.pattern.num_classes() < 1) throw std::invalid_argument("pattern has no classes");
    if (q.pattern.rows() > q.max_pattern_dim || q.pattern.cols() > q.max_pattern_dim)
        throw std::invalid_argument("pattern exceeds size cap " +
                                    std::to_string(q.max_pattern_dim) +
                                    "; raise max_pattern_dim if intended");
}

}  // namespace detail

inline std::optional<Occurrence> find_occurrence(const OccurrenceQuery& q) {
    detail::validate_query(q);
    std::optional<Occurrence> found;
    detail::search_occurrences(q.pattern, q.matrix, q.mode, [&](const Occurrence& occ) {
        found = occ;
        return false;
    });
    if (found && !verify_occurrence(q.pattern, q.matrix, *found))
        throw std::logic_error("occurrence failed re-verification");
    return found;
}

inline bool contains(const OccurrenceQuery& q) { return find_occurrence(q).has_value(); }

inline std::vector<Occurrence> enumerate_occurrences(const OccurrenceQuery& q) {
    detail::validate_query(q);
    std::vector<Occurrence> out;
    detail::search_occurrences(q.pattern, q.matrix, q.mode, [&](const Occurrence& occ) {
        out.push_back(occ);
        return !q.limit || out.size() < *q.limit;
    });
    for (const Occurrence& occ : out)
        if (!verify_occurrence(q.pattern, q.matrix, occ))
            throw std::logic_error("occurrence failed re-verification");
    return out;
}

// Greedy first-fit packing of pairwise cell-disjoint occurrences, taken in
// enumeration order. Each disjoint occurrence forces at least one edit, so
// the packing size is a lower bound for the minimum edit distance.
inline std::vector<Occurrence> pack_disjoint(const OccurrenceQuery& q) {
    detail::validate_query(q);
    std::vector<char> used(static_cast<std::size_t>(q.matrix.rows()) * q.matrix.cols(), 0);
    std::vector<Occurrence> out;
    detail::search_occurrences(q.pattern, q.matrix, q.mode, [&](const Occurrence& occ) {
        for (int i : occ.row_map)
            for (int j : occ.col_map)
                if (used[static_cast<std::size_t>(i) * q.matrix.cols() + j]) return true;
        for (int i : occ.row_map)
            for (int j : occ.col_map)
                used[static_cast<std::size_t>(i) * q.matrix.cols() + j] = 1;
        out.push_back(occ);
        return true;
    });
    return out;
}

}  // namespace patedit

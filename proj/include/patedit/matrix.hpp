// Symbol matrices: m x n grids over the alphabet {1,...,max_symbols}.
// Equivalently, edge colorings of the complete bipartite graph K_{m,n}
// (rows = left vertices, columns = right vertices, entries = edge colors).

#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace patedit {

class SymbolMatrix {
public:
    SymbolMatrix(int rows, int cols, int max_symbols, std::vector<int> entries)
        : rows_(rows), cols_(cols), max_symbols_(max_symbols), entries_(std::move(entries)) {
        if (rows_ < 1 || cols_ < 1)
            throw std::invalid_argument("matrix dimensions must be positive");
        if (max_symbols_ < 1)
            throw std::invalid_argument("alphabet size must be positive");
        if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
            throw std::invalid_argument("entry count does not match dimensions");
        for (int v : entries_)
            if (v < 1 || v > max_symbols_)
                throw std::invalid_argument("entry " + std::to_string(v) +
                                            " outside alphabet 1.." + std::to_string(max_symbols_));
    }

    static SymbolMatrix constant(int rows, int cols, int max_symbols, int symbol) {
        return SymbolMatrix(rows, cols, max_symbols,
                            std::vector<int>(static_cast<std::size_t>(rows) * cols, symbol));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int max_symbols() const { return max_symbols_; }
    const std::vector<int>& entries() const { return entries_; }

    // 0-based indices throughout the library; 1-based only in I/O.
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    void set(int i, int j, int symbol) {
        if (symbol < 1 || symbol > max_symbols_)
            throw std::invalid_argument("entry outside alphabet");
        entries_[static_cast<std::size_t>(i) * cols_ + j] = symbol;
    }

    int distinct_symbols() const {
        std::vector<char> seen(static_cast<std::size_t>(max_symbols_) + 1, 0);
        int count = 0;
        for (int v : entries_)
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
            }
        return count;
    }

    // Histogram over the full alphabet; index 0 unused.
    std::vector<long long> symbol_histogram() const {
        std::vector<long long> hist(static_cast<std::size_t>(max_symbols_) + 1, 0);
        for (int v : entries_) ++hist[v];
        return hist;
    }

    // symbol_map[old] = new for old in 1..max_symbols; must stay within 1..new_max.
    SymbolMatrix relabeled(const std::vector<int>& symbol_map, int new_max_symbols) const {
        std::vector<int> out(entries_.size());
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            int v = entries_[i];
            if (static_cast<std::size_t>(v) >= symbol_map.size())
                throw std::invalid_argument("relabel map too short");
            out[i] = symbol_map[v];
        }
        return SymbolMatrix(rows_, cols_, new_max_symbols, std::move(out));
    }

    // row_perm[i] = source row for destination row i (and likewise for columns).
    SymbolMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
        if (row_perm.size() != static_cast<std::size_t>(rows_) ||
            col_perm.size() != static_cast<std::size_t>(cols_))
            throw std::invalid_argument("permutation size mismatch");
        std::vector<int> out(entries_.size());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out[static_cast<std::size_t>(i) * cols_ + j] = at(row_perm[i], col_perm[j]);
        return SymbolMatrix(rows_, cols_, max_symbols_, std::move(out));
    }

    SymbolMatrix transposed() const {
        std::vector<int> out(entries_.size());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                out[static_cast<std::size_t>(j) * rows_ + i] = at(i, j);
        return SymbolMatrix(cols_, rows_, max_symbols_, std::move(out));
    }

    friend bool operator==(const SymbolMatrix&, const SymbolMatrix&) = default;

private:
    int rows_;
    int cols_;
    int max_symbols_;
    std::vector<int> entries_;
};

// Hamming distance between same-shape matrices.
inline int hamming_distance(const SymbolMatrix& a, const SymbolMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("dimension mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (a.entries()[i] != b.entries()[i]) ++d;
    return d;
}

}  // namespace patedit

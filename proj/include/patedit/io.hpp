// Text formats.
//
// Pattern file: first line "k l"; then k lines of l whitespace-separated
// tokens. "*" is a wildcard; any other token is a class label, with class
// ids assigned by first occurrence (so the parsed pattern is canonical).
//
// Matrix file: first line "m n"; then m lines of n integer tokens >= 1.
// The alphabet size s is inferred as the maximum token unless overridden.

#pragma once

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "patedit/matrix.hpp"
#include "patedit/pattern.hpp"

namespace patedit {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

// Reads the next line that contains any token; returns false at EOF.
inline bool next_content_line(std::istream& in, int& line_no, std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        tokens = tokenize(line);
        if (!tokens.empty()) return true;
    }
    return false;
}

inline int parse_positive_int(const std::string& tok, int line_no, const std::string& what) {
    std::size_t pos = 0;
    long value = 0;
    try {
        value = std::stol(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected " + what + ", got '" + tok + "'");
    }
    if (pos != tok.size() || value < 1 || value > 1000000)
        throw ParseError(line_no, "expected " + what + ", got '" + tok + "'");
    return static_cast<int>(value);
}

}  // namespace detail

inline Pattern parse_pattern(std::istream& in) {
    int line_no = 0;
    std::vector<std::string> tokens;
    if (!detail::next_content_line(in, line_no, tokens))
        throw ParseError(line_no + 1, "missing pattern header 'k l'");
    if (tokens.size() != 2)
        throw ParseError(line_no, "pattern header must be 'k l'");
    int k = detail::parse_positive_int(tokens[0], line_no, "row count");
    int l = detail::parse_positive_int(tokens[1], line_no, "column count");

    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(k) * l);
    std::map<std::string, int> class_of_token;
    for (int i = 0; i < k; ++i) {
        if (!detail::next_content_line(in, line_no, tokens))
            throw ParseError(line_no + 1, "expected " + std::to_string(k) +
                                              " pattern rows, got " + std::to_string(i));
        if (tokens.size() != static_cast<std::size_t>(l))
            throw ParseError(line_no, "expected " + std::to_string(l) + " tokens, got " +
                                          std::to_string(tokens.size()));
        for (const std::string& tok : tokens) {
            if (tok == "*") {
                cells.push_back(Pattern::wildcard);
            } else {
                auto [it, inserted] =
                    class_of_token.emplace(tok, static_cast<int>(class_of_token.size()) + 1);
                cells.push_back(it->second);
            }
        }
    }
    return Pattern(k, l, std::move(cells));
}

inline SymbolMatrix parse_matrix(std::istream& in,
                                 std::optional<int> max_symbols_override = std::nullopt) {
    int line_no = 0;
    std::vector<std::string> tokens;
    if (!detail::next_content_line(in, line_no, tokens))
        throw ParseError(line_no + 1, "missing matrix header 'm n'");
    if (tokens.size() != 2)
        throw ParseError(line_no, "matrix header must be 'm n'");
    int m = detail::parse_positive_int(tokens[0], line_no, "row count");
    int n = detail::parse_positive_int(tokens[1], line_no, "column count");

    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(m) * n);
    int max_seen = 1;
    for (int i = 0; i < m; ++i) {
        if (!detail::next_content_line(in, line_no, tokens))
            throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                              " matrix rows, got " + std::to_string(i));
        if (tokens.size() != static_cast<std::size_t>(n))
            throw ParseError(line_no, "expected " + std::to_string(n) + " entries, got " +
                                          std::to_string(tokens.size()));
        for (const std::string& tok : tokens) {
            int v = detail::parse_positive_int(tok, line_no, "symbol in 1..s");
            if (max_symbols_override && v > *max_symbols_override)
                throw ParseError(line_no, "symbol " + std::to_string(v) +
                                              " exceeds alphabet size " +
                                              std::to_string(*max_symbols_override));
            max_seen = std::max(max_seen, v);
            entries.push_back(v);
        }
    }
    int s = max_symbols_override.value_or(max_seen);
    return SymbolMatrix(m, n, s, std::move(entries));
}

inline Pattern parse_pattern_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_pattern(ss);
}

inline SymbolMatrix parse_matrix_text(const std::string& text,
                                      std::optional<int> max_symbols_override = std::nullopt) {
    std::istringstream ss(text);
    return parse_matrix(ss, max_symbols_override);
}

inline std::string format_pattern(const Pattern& p) {
    std::string out = std::to_string(p.rows()) + " " + std::to_string(p.cols()) + "\n";
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.cols(); ++j) {
            if (j > 0) out += " ";
            int c = p.at(i, j);
            out += c == Pattern::wildcard ? "*" : std::to_string(c);
        }
        out += "\n";
    }
    return out;
}

inline std::string format_matrix(const SymbolMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out += " ";
            out += std::to_string(m.at(i, j));
        }
        out += "\n";
    }
    return out;
}

}  // namespace patedit

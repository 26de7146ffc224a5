// Machine-readable (JSON, stable field order) and human-readable (plain
// table) renderings of results. Coordinates, vertices, and symbols are
// 1-indexed on the wire; rationals are "p/q" strings.

#pragma once

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "patedit/containment.hpp"
#include "patedit/editing.hpp"
#include "patedit/experiment.hpp"
#include "patedit/graphs.hpp"
#include "patedit/io.hpp"

namespace patedit {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<int> one_based(const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] + 1;
    return out;
}

}  // namespace detail

inline Json matrix_json(const SymbolMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"max_symbols", m.max_symbols()},
                {"entries", std::move(rows)}};
}

inline Json pattern_json(const Pattern& p) {
    Json rows = Json::array();
    for (int i = 0; i < p.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < p.cols(); ++j) {
            int c = p.at(i, j);
            if (c == Pattern::wildcard)
                row.push_back("*");
            else
                row.push_back(c);
        }
        rows.push_back(std::move(row));
    }
    return Json{{"rows", p.rows()}, {"cols", p.cols()}, {"num_classes", p.num_classes()},
                {"cells", std::move(rows)}};
}

inline Json occurrence_json(const Occurrence& occ) {
    return Json{{"row_map", detail::one_based(occ.row_map)},
                {"col_map", detail::one_based(occ.col_map)},
                {"class_symbol", occ.class_symbol}};
}

// Pretty grid: mapped cells bracketed, everything else plain.
inline std::string occurrence_pretty(const Occurrence& occ, const SymbolMatrix& m) {
    std::ostringstream out;
    out << "rows:";
    for (int i : occ.row_map) out << " " << i + 1;
    out << "  cols:";
    for (int j : occ.col_map) out << " " << j + 1;
    out << "  class->symbol:";
    for (std::size_t t = 0; t < occ.class_symbol.size(); ++t)
        out << " " << t + 1 << "->" << occ.class_symbol[t];
    out << "\n";
    std::vector<char> row_hit(m.rows(), 0), col_hit(m.cols(), 0);
    for (int i : occ.row_map) row_hit[i] = 1;
    for (int j : occ.col_map) col_hit[j] = 1;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            bool hit = row_hit[i] && col_hit[j];
            out << (hit ? "[" : " ") << m.at(i, j) << (hit ? "]" : " ");
        }
        out << "\n";
    }
    return out.str();
}

inline Json edit_outcome_json(const EditOutcome& outcome) {
    Json edits = Json::array();
    for (const CellEdit& e : outcome.plan.edits)
        edits.push_back(Json{{"row", e.row + 1}, {"col", e.col + 1}, {"new", e.new_symbol}});
    return Json{{"cost", outcome.plan.cost()},
                {"edits", std::move(edits)},
                {"exact", outcome.exact},
                {"lower_bound", outcome.lower_bound},
                {"upper_bound", outcome.upper_bound}};
}

inline Json regularity_json(const RegularityVerdict& v) {
    Json witness;
    if (v.witness) {
        witness = Json{{"left_subset", detail::one_based(v.witness->left_subset)},
                       {"right_subset", detail::one_based(v.witness->right_subset)},
                       {"density", to_fraction_string(v.witness->density)}};
    } else {
        witness = nullptr;
    }
    return Json{{"color", v.color},
                {"epsilon", to_fraction_string(v.epsilon)},
                {"density", to_fraction_string(v.global_density)},
                {"regular", v.regular},
                {"method", v.method == RegularityMethod::exhaustive ? "exhaustive" : "sampled"},
                {"witness", std::move(witness)},
                {"samples", v.samples}};
}

inline Json trend_report_json(const TrendReport& r) {
    Json rows = Json::array();
    for (const TrendRow& row : r.rows) {
        rows.push_back(Json{{"m", row.m},
                            {"n", row.n},
                            {"mean_lower", row.mean_lower},
                            {"mean_upper", row.mean_upper},
                            {"exact_count", row.exact_count},
                            {"ratio_lower", row.ratio_lower},
                            {"ratio_upper", row.ratio_upper},
                            {"bound", to_fraction_string(row.bound)}});
    }
    return Json{{"s", r.s},
                {"trials", r.trials},
                {"seed", r.seed},
                {"solver_budget", r.solver_budget},
                {"pattern", pattern_json(r.pattern)},
                {"bound", to_fraction_string(r.bound)},
                {"rows", std::move(rows)}};
}

inline std::string trend_report_table(const TrendReport& r) {
    std::ostringstream out;
    out << "size      mean_lower  mean_upper  exact  ratio_lower  ratio_upper  bound\n";
    char buf[160];
    for (const TrendRow& row : r.rows) {
        std::snprintf(buf, sizeof(buf), "%3dx%-3d   %10.3f  %10.3f  %5d  %11.4f  %11.4f  %s\n",
                      row.m, row.n, row.mean_lower, row.mean_upper, row.exact_count,
                      row.ratio_lower, row.ratio_upper, to_fraction_string(row.bound).c_str());
        out << buf;
    }
    return out.str();
}

inline Json corollary3_report_json(const Corollary3Report& r) {
    Json rows = Json::array();
    for (const Corollary3Row& row : r.rows) {
        Json missing = Json::array();
        for (const SymbolMatrix& t : row.missing_targets) missing.push_back(matrix_json(t));
        rows.push_back(Json{{"seed", row.seed},
                            {"total_targets", row.total_targets},
                            {"occurred", row.occurred},
                            {"missing", row.missing},
                            {"missing_targets", std::move(missing)}});
    }
    return Json{{"m", r.m}, {"n", r.n}, {"s", r.s}, {"target_side", r.target_side},
                {"rows", std::move(rows)}};
}

inline std::string corollary3_report_table(const Corollary3Report& r) {
    std::ostringstream out;
    out << "host " << r.m << "x" << r.n << ", " << r.s << " colors, targets: all " << r.s
        << "-colorings of K_{" << r.target_side << "," << r.target_side << "}\n";
    out << "seed                  total  occurred  missing\n";
    char buf[120];
    for (const Corollary3Row& row : r.rows) {
        std::snprintf(buf, sizeof(buf), "%-20llu  %5d  %8d  %7d\n",
                      static_cast<unsigned long long>(row.seed), row.total_targets, row.occurred,
                      row.missing);
        out << buf;
    }
    return out.str();
}

inline Json extremal_report_json(const ExtremalReport& r) {
    return Json{{"m", r.m},
                {"n", r.n},
                {"s", r.s},
                {"pattern", pattern_json(r.pattern)},
                {"f_value", r.f_value},
                {"upper_bound", to_fraction_string(r.upper_bound)},
                {"witness", matrix_json(r.witness)}};
}

}  // namespace patedit

// patedit: command-line front end for the pattern avoidance library.
//
// Exit codes: 0 = computed; 1 = property violated (a pattern was found under
// --expect-free, or a destroy plan failed re-verification); 2 = usage,
// budget, or file-format errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "patedit/patedit.hpp"

using namespace patedit;

namespace {

Pattern load_pattern(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    try {
        return parse_pattern(in);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

SymbolMatrix load_matrix(const std::string& path, std::optional<int> max_symbols) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    try {
        return parse_matrix(in, max_symbols);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::vector<Pattern> expand_targets(const Pattern& p) {
    return p.has_wildcards() ? expand_wildcards(p) : std::vector<Pattern>{canonicalize(p)};
}

InjectionMode parse_injection(const std::string& name) {
    if (name == "unordered") return InjectionMode::unordered;
    if (name == "ordered") return InjectionMode::ordered;
    throw CLI::ValidationError("--injection", "must be 'unordered' or 'ordered'");
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto x = item.find('x');
        if (x == std::string::npos)
            throw CLI::ValidationError("--sizes", "expected entries like 6x6, got '" + item + "'");
        try {
            out.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--sizes", "bad size entry '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--sizes", "no sizes given");
    return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--seeds", "bad seed '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--seeds", "no seeds given");
    return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct ContainsArgs {
    std::string matrix_file, pattern_file;
    int max_symbols = 0;  // 0 = infer from file
    std::string injection = "unordered";
    bool all = false;
    std::size_t limit = 0;  // 0 = unlimited
    int max_dim = 4;
    bool expect_free = false;
    std::string format = "table";
};

int run_contains(const ContainsArgs& a) {
    SymbolMatrix m = load_matrix(a.matrix_file,
                                 a.max_symbols ? std::optional<int>(a.max_symbols) : std::nullopt);
    std::vector<Pattern> targets = expand_targets(load_pattern(a.pattern_file));

    std::vector<Occurrence> found;
    std::vector<std::size_t> found_pattern;
    for (std::size_t pi = 0; pi < targets.size(); ++pi) {
        OccurrenceQuery q{targets[pi], m};
        q.mode = parse_injection(a.injection);
        q.max_pattern_dim = a.max_dim;
        if (a.all) {
            if (a.limit) q.limit = a.limit;
            for (Occurrence& occ : enumerate_occurrences(q)) {
                found.push_back(std::move(occ));
                found_pattern.push_back(pi);
            }
        } else if (auto occ = find_occurrence(q)) {
            found.push_back(std::move(*occ));
            found_pattern.push_back(pi);
            break;
        }
    }

    if (a.format == "json") {
        Json occs = Json::array();
        for (std::size_t i = 0; i < found.size(); ++i) {
            Json o = occurrence_json(found[i]);
            o["pattern"] = pattern_json(targets[found_pattern[i]]);
            occs.push_back(std::move(o));
        }
        emit(Json{{"contains", !found.empty()}, {"occurrences", std::move(occs)}});
    } else if (found.empty()) {
        std::cout << "pattern-free\n";
    } else {
        std::cout << "contains\n";
        for (const Occurrence& occ : found) std::cout << occurrence_pretty(occ, m);
    }
    return a.expect_free && !found.empty() ? 1 : 0;
}

struct EditArgs {
    std::string matrix_file, pattern_file;
    int max_symbols = 0;
    std::uint64_t budget = 1u << 20;
    std::string injection = "unordered";
    int max_dim = 4;
    std::string format = "table";
};

int run_edit(const EditArgs& a) {
    SymbolMatrix m = load_matrix(a.matrix_file,
                                 a.max_symbols ? std::optional<int>(a.max_symbols) : std::nullopt);
    std::vector<Pattern> targets = expand_targets(load_pattern(a.pattern_file));
    SolverOptions opts;
    opts.node_budget = a.budget;
    opts.mode = parse_injection(a.injection);
    opts.max_pattern_dim = a.max_dim;
    EditOutcome outcome = min_edit_distance(m, std::span<const Pattern>(targets), opts);

    if (a.format == "json") {
        emit(edit_outcome_json(outcome));
    } else {
        std::cout << "cost " << outcome.plan.cost()
                  << (outcome.exact ? " (exact)" : " (bracketed, true optimum in [" +
                                                       std::to_string(outcome.lower_bound) + ", " +
                                                       std::to_string(outcome.upper_bound) + "])")
                  << "\n";
        for (const CellEdit& e : outcome.plan.edits)
            std::cout << "edit (" << e.row + 1 << "," << e.col + 1 << ") -> " << e.new_symbol
                      << "\n";
        std::cout << "result:\n" << format_matrix(outcome.plan.result);
    }
    return 0;
}

struct DestroyArgs {
    std::string matrix_file, pattern_file;
    int classes = 0;
    int max_symbols = 0;
    std::string format = "table";
};

int run_destroy(const DestroyArgs& a) {
    SymbolMatrix m = load_matrix(a.matrix_file,
                                 a.max_symbols ? std::optional<int>(a.max_symbols) : std::nullopt);
    std::vector<Pattern> targets;
    int r = a.classes;
    if (!a.pattern_file.empty()) {
        targets = expand_targets(load_pattern(a.pattern_file));
        r = targets[0].num_classes();
        for (const Pattern& p : targets) r = std::min(r, p.num_classes());
    }
    if (r < 1) throw CLI::ValidationError("destroy", "need --pattern or --classes");

    EditPlan plan = merge_smallest_classes(m, r);

    // Re-verify before printing: the result must avoid every target pattern
    // (when given) and must have dropped below r distinct symbols.
    bool verified = r == 1 || plan.result.distinct_symbols() <= r - 1;
    for (const Pattern& p : targets)
        if (contains(OccurrenceQuery{p, plan.result})) verified = false;

    if (a.format == "json") {
        Json j{{"cost", plan.cost()},
               {"edits", Json::array()},
               {"verified_free", verified},
               {"result", matrix_json(plan.result)}};
        for (const CellEdit& e : plan.edits)
            j["edits"].push_back(Json{{"row", e.row + 1}, {"col", e.col + 1}, {"new", e.new_symbol}});
        emit(j);
    } else {
        std::cout << "cost " << plan.cost() << (verified ? " (verified pattern-free)" : "")
                  << "\nresult:\n"
                  << format_matrix(plan.result);
    }
    if (!verified) {
        std::cerr << "error: merge result failed pattern-freedom re-verification\n";
        return 1;
    }
    return 0;
}

struct ExtremalArgs {
    int m = 2, n = 2, s = 2;
    std::string pattern_file;
    long long budget = 2000000;
    std::string format = "table";
};

int run_extremal(const ExtremalArgs& a) {
    ExtremalOptions opts;
    opts.enumeration_budget = a.budget;
    ExtremalReport report = extremal_f(a.m, a.n, a.s, load_pattern(a.pattern_file), opts);
    if (a.format == "json") {
        emit(extremal_report_json(report));
    } else {
        std::cout << "f(" << a.m << "," << a.n << ";" << a.s << ") = " << report.f_value
                  << "  (upper bound " << to_string(report.upper_bound) << ")\n"
                  << "witness:\n"
                  << format_matrix(report.witness);
    }
    return 0;
}

struct RegcheckArgs {
    std::string matrix_file;
    int color = 1;
    std::string epsilon;
    std::string mode = "auto";
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    int cap = 16;
    std::string format = "table";
};

int run_regcheck(const RegcheckArgs& a) {
    ColoredPair c(load_matrix(a.matrix_file, std::nullopt));
    Rational eps = parse_rational(a.epsilon);
    RegularityOptions opts;
    opts.sample_budget = a.samples;
    opts.seed = a.seed;
    opts.exhaustive_cap = a.cap;
    if (a.mode == "exact" || a.mode == "exhaustive")
        opts.method = RegularityMethod::exhaustive;
    else if (a.mode == "sampled")
        opts.method = RegularityMethod::sampled;
    else if (a.mode == "auto")
        opts.method = c.left_size() + c.right_size() <= a.cap ? RegularityMethod::exhaustive
                                                              : RegularityMethod::sampled;
    else
        throw CLI::ValidationError("--mode", "must be exact, sampled, or auto");

    RegularityVerdict v = is_epsilon_regular(c, a.color, eps, opts);
    if (a.format == "json") {
        emit(regularity_json(v));
    } else {
        std::cout << (v.regular ? "regular" : "irregular") << " ("
                  << (v.method == RegularityMethod::exhaustive ? "exhaustive" : "sampled");
        if (!v.definitive()) std::cout << ", not definitive";
        std::cout << ")\nglobal density " << to_fraction_string(v.global_density) << "\n";
        if (v.witness) {
            std::cout << "witness X' = {";
            for (std::size_t i = 0; i < v.witness->left_subset.size(); ++i)
                std::cout << (i ? "," : "") << v.witness->left_subset[i] + 1;
            std::cout << "}, Y' = {";
            for (std::size_t i = 0; i < v.witness->right_subset.size(); ++i)
                std::cout << (i ? "," : "") << v.witness->right_subset[i] + 1;
            std::cout << "}, density " << to_fraction_string(v.witness->density) << "\n";
        }
    }
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"matrix pattern avoidance toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    ContainsArgs ca;
    CLI::App* contains_cmd = app.add_subcommand("contains", "search for a pattern in a matrix");
    contains_cmd->add_option("--matrix", ca.matrix_file, "matrix file")->required();
    contains_cmd->add_option("--pattern", ca.pattern_file, "pattern file")->required();
    contains_cmd->add_option("--s", ca.max_symbols, "alphabet size override");
    contains_cmd->add_option("--injection", ca.injection, "unordered|ordered");
    contains_cmd->add_flag("--all", ca.all, "enumerate all occurrences");
    contains_cmd->add_option("--limit", ca.limit, "cap enumeration");
    contains_cmd->add_option("--max-dim", ca.max_dim, "pattern dimension cap");
    contains_cmd->add_flag("--expect-free", ca.expect_free, "exit 1 if the pattern occurs");
    contains_cmd->add_option("--format", ca.format, "table|json");
    contains_cmd->callback([&] { exit_code = run_contains(ca); });

    EditArgs ea;
    CLI::App* edit_cmd = app.add_subcommand("edit", "minimum edits to destroy a pattern");
    edit_cmd->add_option("--matrix", ea.matrix_file, "matrix file")->required();
    edit_cmd->add_option("--pattern", ea.pattern_file, "pattern file")->required();
    edit_cmd->add_option("--s", ea.max_symbols, "alphabet size override");
    edit_cmd->add_option("--budget", ea.budget, "solver node budget (0 = bracket only)");
    edit_cmd->add_option("--injection", ea.injection, "unordered|ordered");
    edit_cmd->add_option("--max-dim", ea.max_dim, "pattern dimension cap");
    edit_cmd->add_option("--format", ea.format, "table|json");
    edit_cmd->callback([&] { exit_code = run_edit(ea); });

    DestroyArgs da;
    CLI::App* destroy_cmd =
        app.add_subcommand("destroy", "merge smallest symbol classes (heuristic plan)");
    destroy_cmd->add_option("--matrix", da.matrix_file, "matrix file")->required();
    destroy_cmd->add_option("--pattern", da.pattern_file, "pattern file (sets the class count)");
    destroy_cmd->add_option("--classes", da.classes, "target class count r");
    destroy_cmd->add_option("--s", da.max_symbols, "alphabet size override");
    destroy_cmd->add_option("--format", da.format, "table|json");
    destroy_cmd->callback([&] { exit_code = run_destroy(da); });

    ExtremalArgs xa;
    CLI::App* extremal_cmd = app.add_subcommand("extremal", "exhaustive f at tiny scale");
    extremal_cmd->add_option("--m", xa.m, "rows")->required();
    extremal_cmd->add_option("--n", xa.n, "cols")->required();
    extremal_cmd->add_option("--s", xa.s, "alphabet size")->required();
    extremal_cmd->add_option("--pattern", xa.pattern_file, "pattern file")->required();
    extremal_cmd->add_option("--budget", xa.budget, "enumeration budget on s^(mn)");
    extremal_cmd->add_option("--format", xa.format, "table|json");
    extremal_cmd->callback([&] { exit_code = run_extremal(xa); });

    long long bm = 0, bn = 0, bs = 0, br = 0;
    CLI::App* bound_cmd = app.add_subcommand("bound", "theoretical bound ((s-r+1)/s) m n");
    bound_cmd->add_option("--m", bm, "rows")->required();
    bound_cmd->add_option("--n", bn, "cols")->required();
    bound_cmd->add_option("--s", bs, "alphabet size")->required();
    bound_cmd->add_option("--r", br, "pattern class count")->required();
    bound_cmd->callback([&] { std::cout << to_string(theoretical_bound(bm, bn, bs, br)) << "\n"; });

    RegcheckArgs ra;
    CLI::App* regcheck_cmd = app.add_subcommand("regcheck", "epsilon-regularity verdict");
    regcheck_cmd->add_option("--matrix", ra.matrix_file, "coloring as a matrix file")->required();
    regcheck_cmd->add_option("--color", ra.color, "color to check")->required();
    regcheck_cmd->add_option("--epsilon", ra.epsilon, "epsilon as p/q or decimal")->required();
    regcheck_cmd->add_option("--mode", ra.mode, "exact|sampled|auto");
    regcheck_cmd->add_option("--samples", ra.samples, "sample budget");
    regcheck_cmd->add_option("--seed", ra.seed, "sampling seed");
    regcheck_cmd->add_option("--cap", ra.cap, "exhaustive cap on m+n");
    regcheck_cmd->add_option("--format", ra.format, "table|json");
    regcheck_cmd->callback([&] { exit_code = run_regcheck(ra); });

    int rm = 4, rn = 4, rs = 2;
    std::uint64_t rseed = 1;
    std::string rformat = "table";
    CLI::App* random_cmd = app.add_subcommand("random", "emit a seeded random matrix");
    random_cmd->add_option("--m", rm, "rows")->required();
    random_cmd->add_option("--n", rn, "cols")->required();
    random_cmd->add_option("--s", rs, "alphabet size")->required();
    random_cmd->add_option("--seed", rseed, "seed")->required();
    random_cmd->add_option("--format", rformat, "table|json");
    random_cmd->callback([&] {
        SymbolMatrix m = random_coloring(rm, rn, rs, rseed);
        if (rformat == "json")
            emit(matrix_json(m));
        else
            std::cout << format_matrix(m);
    });

    ExperimentConfig cfg;
    std::string exp_sizes, exp_pattern_file, exp_format = "table";
    CLI::App* exp_cmd = app.add_subcommand("experiment", "Monte Carlo edit-distance sweep");
    exp_cmd->add_option("--m", cfg.m, "rows");
    exp_cmd->add_option("--n", cfg.n, "cols");
    exp_cmd->add_option("--s", cfg.s, "alphabet size")->required();
    exp_cmd->add_option("--pattern", exp_pattern_file, "pattern file")->required();
    exp_cmd->add_option("--trials", cfg.trials, "trials per size");
    exp_cmd->add_option("--seed", cfg.seed, "master seed");
    exp_cmd->add_option("--budget", cfg.solver_budget, "solver node budget (0 = bracket only)");
    exp_cmd->add_option("--sizes", exp_sizes, "sweep sizes, e.g. 6x6,8x8,10x10");
    exp_cmd->add_option("--format", exp_format, "table|json");
    exp_cmd->callback([&] {
        cfg.pattern = load_pattern(exp_pattern_file);
        if (!exp_sizes.empty()) cfg.sizes = parse_sizes(exp_sizes);
        TrendReport report = estimate_f_monte_carlo(cfg);
        if (exp_format == "json")
            emit(trend_report_json(report));
        else
            std::cout << trend_report_table(report);
    });

    int c3m = 16, c3n = 16, c3s = 2, c3side = 2;
    std::string c3seeds, c3format = "table";
    CLI::App* c3_cmd = app.add_subcommand("corollary3", "exact-coloring occurrence sweep");
    c3_cmd->add_option("--m", c3m, "host rows")->required();
    c3_cmd->add_option("--n", c3n, "host cols")->required();
    c3_cmd->add_option("--s", c3s, "colors")->required();
    c3_cmd->add_option("--side", c3side, "target side length");
    c3_cmd->add_option("--seeds", c3seeds, "comma-separated seeds")->required();
    c3_cmd->add_option("--format", c3format, "table|json");
    c3_cmd->callback([&] {
        std::vector<std::uint64_t> seeds = parse_seeds(c3seeds);
        Corollary3Report report = corollary3_sweep(c3m, c3n, c3s, c3side, seeds);
        if (c3format == "json")
            emit(corollary3_report_json(report));
        else
            std::cout << corollary3_report_table(report);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

int main(int argc, char** argv) { return cli_main(argc, argv); }

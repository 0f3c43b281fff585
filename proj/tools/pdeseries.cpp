// Command-line front end: solve problems from files, verify the HPM
// iteration against the series, evaluate at points, run the built-in
// example corpus.
//
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>
#include <iostream>

#include "pde/report.hpp"

namespace {

using namespace pde;

std::map<std::string, Rational> parse_assignment(const std::string& text) {
    std::map<std::string, Rational> point;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw InputError("--at expects comma-separated var=value pairs, got '" + item + "'");
        std::string var = item.substr(0, eq);
        point[var] = parse_rational(item.substr(eq + 1));
    }
    return point;
}

int cmd_solve(const std::string& path, int order, bool recognize, bool as_json) {
    ProblemSpec spec = load_problem(path);
    RunOptions opts;
    opts.order = order > 0 ? order : spec.order;
    opts.recognize = recognize;
    Report r = run_solve(spec, opts, path);
    std::cout << (as_json ? report_json(r) : report_text(r)) << "\n";
    return r.pass ? 0 : 1;
}

int cmd_hpm_check(const std::string& path, int terms, bool as_json) {
    ProblemSpec spec = load_problem(path);
    RunOptions opts;
    opts.order = spec.order;
    opts.hpm_terms = terms;
    Report r = run_solve(spec, opts, path);
    std::cout << (as_json ? report_json(r) : report_text(r)) << "\n";
    return r.hpm_equal.value_or(false) ? 0 : 1;
}

int cmd_eval(const std::string& path, const std::string& at, const std::string& t_text,
             int order) {
    ProblemSpec spec = load_problem(path);
    SeriesSolution s = solve(spec, order > 0 ? order : spec.order);
    auto point = parse_assignment(at);
    Rational t = parse_rational(t_text);
    Rational value = series_eval(s, point, t);
    std::cout << rational_str(value) << "\n";
    std::cout << "~ " << static_cast<double>(value) << "\n";
    return 0;
}

int cmd_corpus(int order, bool as_json) {
    auto reports = run_corpus(order);
    bool all_pass = true;
    if (as_json) {
        std::cout << reports_json(reports) << "\n";
        for (const auto& r : reports) all_pass = all_pass && r.pass;
    } else {
        for (const auto& r : reports) {
            std::cout << report_text(r) << "\n";
            all_pass = all_pass && r.pass;
        }
        std::cout << (all_pass ? "corpus: all entries PASS" : "corpus: FAIL") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact time-power-series solver for heat-like and wave-like PDEs"};
    app.require_subcommand(1);

    std::string path, at, t_text;
    int order = 0, terms = 8;
    bool recognize = false, as_json = false;

    auto* solve_cmd = app.add_subcommand("solve", "solve a problem file");
    solve_cmd->add_option("file", path)->required();
    solve_cmd->add_option("--order", order, "series truncation order");
    solve_cmd->add_flag("--recognize", recognize, "attempt closed-form recognition");
    solve_cmd->add_flag("--json", as_json, "machine-readable report");

    auto* hpm_cmd = app.add_subcommand("hpm-check", "verify HPM output equals the series");
    hpm_cmd->add_option("file", path)->required();
    hpm_cmd->add_option("--terms", terms, "number of HPM correction terms")->required();
    hpm_cmd->add_flag("--json", as_json);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate the series at a point");
    eval_cmd->add_option("file", path)->required();
    eval_cmd->add_option("--at", at, "spatial assignment, e.g. x=1,y=1/2")->required();
    eval_cmd->add_option("--t", t_text, "time value")->required();
    eval_cmd->add_option("--order", order);

    auto* corpus_cmd = app.add_subcommand("corpus", "run every built-in example");
    corpus_cmd->add_option("--order", order);
    corpus_cmd->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(path, order, recognize, as_json);
        if (hpm_cmd->parsed()) return cmd_hpm_check(path, terms, as_json);
        if (eval_cmd->parsed()) return cmd_eval(path, at, t_text, order);
        if (corpus_cmd->parsed()) return cmd_corpus(order > 0 ? order : 12, as_json);
    } catch (const pde::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#include "pde/problem.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace pde {

namespace {

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : s + " ") {
        if (c == ' ' || c == '\t' || c == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    return names;
}

}  // namespace

ProblemSpec parse_problem(std::istream& in, const std::string& source_name) {
    static const std::vector<std::string> known = {"kind", "vars", "L", "f", "u0", "u1", "order"};
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError(source_name + ":" + std::to_string(lineno) +
                             ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw InputError(source_name + ":" + std::to_string(lineno) + ": unknown key '" +
                             key + "'");
        if (kv.count(key))
            throw InputError(source_name + ":" + std::to_string(lineno) + ": duplicate key '" +
                             key + "'");
        kv[key] = value;
    }

    auto require = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw InputError(source_name + ": missing required key '" + key + "'");
        return it->second;
    };

    ProblemSpec spec;
    const std::string& kind = require("kind");
    if (kind == "heat")
        spec.kind = Kind::heat;
    else if (kind == "wave")
        spec.kind = Kind::wave;
    else
        throw InputError(source_name + ": kind must be 'heat' or 'wave', got '" + kind + "'");

    auto names = split_names(require("vars"));
    if (names.empty()) throw InputError(source_name + ": vars must list at least one variable");
    try {
        spec.variables = VariableSet(names);
    } catch (const Error& e) {
        throw InputError(source_name + ": " + e.what());
    }

    spec.operator_text = require("L");
    spec.f_text = require("f");
    spec.u0_text = require("u0");
    if (spec.kind == Kind::wave) {
        spec.u1_text = require("u1");
    } else if (kv.count("u1")) {
        throw InputError(source_name + ": key 'u1' is only valid for wave problems");
    }
    if (kv.count("order")) {
        try {
            spec.order = std::stoi(kv["order"]);
        } catch (const std::exception&) {
            throw InputError(source_name + ": malformed order '" + kv["order"] + "'");
        }
        if (spec.order < 4 || spec.order > 64)
            throw InputError(source_name + ": order must be within [4, 64]");
    }
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file: " + path);
    return parse_problem(in, path);
}

HeatProblem build_heat(const ProblemSpec& spec) {
    if (spec.kind != Kind::heat) throw Error("problem spec is not a heat problem");
    return {parse_operator(spec.operator_text, spec.variables),
            parse_poly(spec.f_text, spec.variables),
            parse_poly(spec.u0_text, spec.variables)};
}

WaveProblem build_wave(const ProblemSpec& spec) {
    if (spec.kind != Kind::wave) throw Error("problem spec is not a wave problem");
    return {parse_operator(spec.operator_text, spec.variables),
            parse_poly(spec.f_text, spec.variables),
            parse_poly(spec.u0_text, spec.variables),
            parse_poly(*spec.u1_text, spec.variables)};
}

SeriesSolution solve(const ProblemSpec& spec, int order) {
    if (spec.kind == Kind::heat) return solve_heat(build_heat(spec), order);
    return solve_wave(build_wave(spec), order);
}

}  // namespace pde

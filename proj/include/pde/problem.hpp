#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pde/parser.hpp"
#include "pde/series.hpp"

namespace pde {

// Textual encoding of one heat or wave problem. Line-oriented key: value
// format with keys kind, vars, L, f, u0, u1 (wave only), order.
struct ProblemSpec {
    Kind kind = Kind::heat;
    VariableSet variables;
    std::string operator_text;
    std::string f_text;
    std::string u0_text;
    std::optional<std::string> u1_text;
    int order = 12;
};

struct InputError : Error {
    using Error::Error;
};

ProblemSpec parse_problem(std::istream& in, const std::string& source_name);
ProblemSpec load_problem(const std::string& path);

HeatProblem build_heat(const ProblemSpec& spec);
WaveProblem build_wave(const ProblemSpec& spec);

// Solves through whichever recurrence the spec selects.
SeriesSolution solve(const ProblemSpec& spec, int order);

}  // namespace pde

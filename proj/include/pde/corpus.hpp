#pragma once

#include "pde/closedform.hpp"
#include "pde/problem.hpp"

namespace pde {

// Boundary data: fixing the spatial point turns the solution into a
// function of t alone, expressed in the same exponential basis.
struct BoundaryCheck {
    std::map<std::string, Rational> point;
    std::vector<std::pair<Rational, Rational>> expected;  // (rate, amplitude), rate desc
    std::string label;
};

// One built-in worked example: problem, known exact solution, and the
// boundary conditions the source prints explicitly. Entries without
// printed boundary formulas carry a note instead.
struct CorpusEntry {
    std::string id;
    ProblemSpec spec;
    ClosedForm expected;
    std::string expected_display;
    std::vector<BoundaryCheck> boundary_checks;
    std::string boundary_note;
};

const std::vector<CorpusEntry>& corpus();

}  // namespace pde

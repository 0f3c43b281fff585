#pragma once

#include <chrono>

#include "pde/corpus.hpp"
#include "pde/hpm.hpp"

namespace pde {

struct BoundaryVerdict {
    std::string label;
    std::string actual;
    bool pass = false;
};

// Everything one pipeline run produced. The JSON and text renderings
// carry identical values; timing is excluded from determinism guarantees.
struct Report {
    std::string id;
    Kind kind = Kind::heat;
    int order = 0;
    std::vector<std::string> coeffs;
    bool recognize_requested = false;
    std::optional<ClosedForm> closed_form;
    std::string closed_form_display;
    std::optional<int> residual_floor_value;  // nullopt = residual identically zero
    std::optional<bool> hpm_equal;
    std::optional<HpmComparison> hpm_detail;
    std::vector<BoundaryVerdict> boundary;
    std::string boundary_note;
    bool pass = true;
    double elapsed_ms = 0.0;
};

struct RunOptions {
    int order = 12;
    bool recognize = false;
    int hpm_terms = 0;  // 0 = skip the HPM check
};

Report run_solve(const ProblemSpec& spec, const RunOptions& opts, const std::string& id = "");

// Substitutes each stored boundary point into the recognized form and
// compares the resulting function of t against the expected one exactly.
std::vector<BoundaryVerdict> run_boundary_check(const CorpusEntry& entry, const ClosedForm& cf);

// Full pipeline over all built-in examples: solve, recognize, compare
// with the known exact solution, HPM check, residual floor, boundary
// checks. Any mismatch flips the entry's pass flag.
std::vector<Report> run_corpus(int order = 12);

std::string report_text(const Report& r);
std::string report_json(const Report& r);
std::string reports_json(const std::vector<Report>& rs);

}  // namespace pde

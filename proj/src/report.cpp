#include "pde/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace pde {

namespace {

using nlohmann::json;

const char* kind_name(Kind k) { return k == Kind::heat ? "heat" : "wave"; }

// Fixing the spatial point turns the closed form into a function of t,
// represented as a ClosedForm over an empty variable set.
ClosedForm substitute_point(const ClosedForm& cf, const std::map<std::string, Rational>& point) {
    VariableSet none;
    std::map<Rational, Rational> by_rate;
    for (const auto& term : cf.terms) {
        Rational v = term.spatial.eval(point);
        if (v == 0) continue;
        by_rate[term.rate] += v;
    }
    ClosedForm tf{none, {}};
    for (auto it = by_rate.rbegin(); it != by_rate.rend(); ++it)
        if (it->second != 0)
            tf.terms.push_back({it->first, Polynomial::constant(none, it->second)});
    return tf;
}

int covered_power(Kind kind, int hpm_terms) {
    return kind == Kind::heat ? hpm_terms : 2 * hpm_terms + 1;
}

}  // namespace

Report run_solve(const ProblemSpec& spec, const RunOptions& opts, const std::string& id) {
    auto start = std::chrono::steady_clock::now();
    Report r;
    r.id = id;
    r.kind = spec.kind;
    r.order = opts.order;
    r.recognize_requested = opts.recognize;

    SeriesSolution series = solve(spec, opts.order);
    for (const auto& c : series.coeffs) r.coeffs.push_back(c.str());

    if (spec.kind == Kind::heat) {
        r.residual_floor_value = residual_floor(series, build_heat(spec));
    } else {
        r.residual_floor_value = residual_floor(series, build_wave(spec));
    }

    if (opts.recognize) {
        r.closed_form = recognize(series);
        if (r.closed_form) r.closed_form_display = render(*r.closed_form);
    }

    if (opts.hpm_terms > 0) {
        const int needed = covered_power(spec.kind, opts.hpm_terms);
        const SeriesSolution& cmp_series =
            series.order() >= needed ? series : solve(spec, needed);
        HpmExpansion e = spec.kind == Kind::heat ? hpm_heat(build_heat(spec), opts.hpm_terms)
                                                 : hpm_wave(build_wave(spec), opts.hpm_terms);
        HpmComparison cmp = hpm_equals_taylor(e, cmp_series);
        r.hpm_equal = cmp.equal;
        r.hpm_detail = cmp;
        if (!cmp.equal) r.pass = false;
    }

    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

std::vector<BoundaryVerdict> run_boundary_check(const CorpusEntry& entry, const ClosedForm& cf) {
    std::vector<BoundaryVerdict> verdicts;
    for (const auto& check : entry.boundary_checks) {
        ClosedForm actual = substitute_point(cf, check.point);
        BoundaryVerdict v;
        v.label = check.label;
        v.actual = render(actual);
        std::vector<std::pair<Rational, Rational>> got;
        for (const auto& term : actual.terms)
            got.emplace_back(term.rate, term.spatial.terms().empty()
                                            ? Rational(0)
                                            : term.spatial.terms().begin()->second);
        v.pass = got == check.expected;
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

std::vector<Report> run_corpus(int order) {
    std::vector<Report> reports;
    for (const auto& entry : corpus()) {
        RunOptions opts;
        opts.order = order;
        opts.recognize = true;
        opts.hpm_terms = 8;
        Report r = run_solve(entry.spec, opts, entry.id);

        if (!r.closed_form || !(*r.closed_form == entry.expected) ||
            r.closed_form_display != entry.expected_display)
            r.pass = false;

        const int floor_required = entry.spec.kind == Kind::heat ? order : order - 1;
        if (r.residual_floor_value && *r.residual_floor_value < floor_required) r.pass = false;

        if (r.closed_form) {
            r.boundary = run_boundary_check(entry, *r.closed_form);
            for (const auto& v : r.boundary)
                if (!v.pass) r.pass = false;
        }
        r.boundary_note = entry.boundary_note;
        reports.push_back(std::move(r));
    }
    return reports;
}

std::string report_text(const Report& r) {
    std::ostringstream out;
    if (!r.id.empty()) out << r.id << ": ";
    out << kind_name(r.kind) << " problem, order " << r.order << "\n";
    for (std::size_t n = 0; n < r.coeffs.size(); ++n)
        out << "  u_" << n << " = " << r.coeffs[n] << "\n";
    out << "  residual floor: ";
    if (r.residual_floor_value)
        out << *r.residual_floor_value;
    else
        out << "infinity";
    out << "\n";
    if (r.recognize_requested) {
        if (r.closed_form)
            out << "  closed form: " << r.closed_form_display << "\n";
        else
            out << "  closed form: not recognized\n";
    }
    if (r.hpm_equal) {
        out << "  hpm check: " << (*r.hpm_equal ? "equal" : "MISMATCH");
        if (!*r.hpm_equal && r.hpm_detail)
            out << " at v_" << r.hpm_detail->mismatch_term << ", t^"
                << r.hpm_detail->mismatch_power;
        out << "\n";
    }
    for (const auto& v : r.boundary)
        out << "  boundary " << v.label << ": " << (v.pass ? "satisfied" : "VIOLATED")
            << " (got " << v.actual << ")\n";
    if (!r.boundary_note.empty()) out << "  boundary note: " << r.boundary_note << "\n";
    out << "  verdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

namespace {

json report_to_json(const Report& r) {
    json j;
    j["id"] = r.id;
    j["kind"] = kind_name(r.kind);
    j["order"] = r.order;
    j["coefficients"] = r.coeffs;
    j["residual_floor"] =
        r.residual_floor_value ? json(*r.residual_floor_value) : json("infinity");
    if (r.recognize_requested) {
        if (r.closed_form) {
            json terms = json::array();
            for (const auto& term : r.closed_form->terms)
                terms.push_back({{"rate", rational_str(term.rate)},
                                 {"spatial", term.spatial.str()}});
            j["closed_form"] = {{"terms", terms}, {"display", r.closed_form_display}};
        } else {
            j["closed_form"] = nullptr;
        }
    }
    if (r.hpm_equal) {
        j["hpm"] = {{"equal", *r.hpm_equal}};
        if (!*r.hpm_equal && r.hpm_detail) {
            j["hpm"]["mismatch_term"] = r.hpm_detail->mismatch_term;
            j["hpm"]["mismatch_power"] = r.hpm_detail->mismatch_power;
        }
    }
    if (!r.boundary.empty()) {
        json checks = json::array();
        for (const auto& v : r.boundary)
            checks.push_back({{"label", v.label}, {"actual", v.actual}, {"pass", v.pass}});
        j["boundary_checks"] = checks;
    }
    if (!r.boundary_note.empty()) j["boundary_note"] = r.boundary_note;
    j["pass"] = r.pass;
    j["timing_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace

std::string report_json(const Report& r) { return report_to_json(r).dump(2); }

std::string reports_json(const std::vector<Report>& rs) {
    json arr = json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r));
    return arr.dump(2);
}

}  // namespace pde

#include "pde/corpus.hpp"

namespace pde {

namespace {

ProblemSpec make_spec(Kind kind, std::vector<std::string> vars, std::string op,
                      std::string f, std::string u0, std::string u1 = "") {
    ProblemSpec s;
    s.kind = kind;
    s.variables = VariableSet(std::move(vars));
    s.operator_text = std::move(op);
    s.f_text = std::move(f);
    s.u0_text = std::move(u0);
    if (kind == Kind::wave) s.u1_text = std::move(u1);
    return s;
}

ClosedForm make_form(const VariableSet& vars,
                     std::vector<std::pair<Rational, std::string>> terms) {
    ClosedForm cf{vars, {}};
    for (auto& [rate, text] : terms)
        cf.terms.push_back({rate, parse_poly(text, vars)});
    return cf;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> entries;

    {
        CorpusEntry e;
        e.id = "example1";
        e.spec = make_spec(Kind::heat, {"x"}, "(1/2)*x^2*D(x,2)", "0", "x^2");
        e.expected = make_form(e.spec.variables, {{1, "x^2"}});
        e.expected_display = "x^2*exp(t)";
        e.boundary_checks = {
            {{{"x", 0}}, {}, "u(0,t) = 0"},
            {{{"x", 1}}, {{1, 1}}, "u(1,t) = exp(t)"},
        };
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "example2";
        e.spec = make_spec(Kind::heat, {"x", "y"},
                           "(1/2)*y^2*D(x,2) + (1/2)*x^2*D(y,2)", "0", "y^2");
        e.expected = make_form(e.spec.variables,
                               {{1, "1/2*x^2 + 1/2*y^2"}, {-1, "1/2*y^2 - 1/2*x^2"}});
        e.expected_display = "y^2*cosh(t) + x^2*sinh(t)";
        e.boundary_note = "source requires four Neumann conditions but prints no formulas";
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "example3";
        e.spec = make_spec(Kind::heat, {"x", "y", "z"},
                           "(1/36)*x^2*D(x,2) + (1/36)*y^2*D(y,2) + (1/36)*z^2*D(z,2)",
                           "x^4*y^4*z^4", "0");
        e.expected = make_form(e.spec.variables, {{1, "x^4*y^4*z^4"}, {0, "-x^4*y^4*z^4"}});
        e.expected_display = "x^4*y^4*z^4*(exp(t)-1)";
        e.boundary_note = "source requires six Neumann conditions but prints no formulas";
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "example4";
        e.spec = make_spec(Kind::wave, {"x"}, "(1/2)*x^2*D(x,2)", "0", "x", "x^2");
        e.expected = make_form(e.spec.variables,
                               {{1, "1/2*x^2"}, {0, "x"}, {-1, "-1/2*x^2"}});
        e.expected_display = "x + x^2*sinh(t)";
        e.boundary_checks = {
            {{{"x", 0}}, {}, "u(0,t) = 0"},
            {{{"x", 1}}, {{1, Rational(1, 2)}, {0, 1}, {-1, Rational(-1, 2)}},
             "u(1,t) = 1 + sinh(t)"},
        };
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "example5";
        e.spec = make_spec(Kind::wave, {"x", "y"},
                           "(1/12)*x^2*D(x,2) + (1/12)*y^2*D(y,2)", "0", "x^4", "y^4");
        e.expected = make_form(e.spec.variables,
                               {{1, "1/2*x^4 + 1/2*y^4"}, {-1, "1/2*x^4 - 1/2*y^4"}});
        e.expected_display = "x^4*cosh(t) + y^4*sinh(t)";
        e.boundary_note = "source requires four Neumann conditions but prints no formulas";
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e;
        e.id = "example6";
        e.spec = make_spec(Kind::wave, {"x", "y", "z"},
                           "(1/2)*x^2*D(x,2) + (1/2)*y^2*D(y,2) + (1/2)*z^2*D(z,2)",
                           "x^2 + y^2 + z^2", "0", "x^2 + y^2 - z^2");
        e.expected = make_form(e.spec.variables,
                               {{1, "x^2 + y^2"}, {0, "-x^2 - y^2 - z^2"}, {-1, "z^2"}});
        e.expected_display = "(x^2+y^2)*(exp(t)-1) + z^2*(exp(-t)-1)";
        e.boundary_note = "source mentions six boundary conditions but prints no formulas";
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

}  // namespace pde

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pde/rational.hpp"

namespace pde {

// Ordered set of spatial variable names; fixed for the lifetime of a problem.
class VariableSet {
public:
    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index(const std::string& name) const;

    bool operator==(const VariableSet& other) const { return names_ == other.names_; }
    bool operator!=(const VariableSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

// Exponent tuple, one entry per variable of the owning VariableSet.
struct Monomial {
    std::vector<unsigned> exps;

    unsigned total_degree() const;
    bool operator==(const Monomial& o) const { return exps == o.exps; }
    // Graded lexicographic, ascending. Display iterates in reverse.
    bool operator<(const Monomial& o) const;
};

// Resource caps; runaway inputs fail with CapError instead of exhausting memory.
struct PolyLimits {
    unsigned max_total_degree = 64;
    std::size_t max_terms = 100000;
};

PolyLimits& poly_limits();

// Sparse multivariate polynomial over Rational. Immutable in use: all
// operations return new values. Stored coefficients are never zero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(VariableSet vars) : vars_(std::move(vars)) {}

    static Polynomial constant(const VariableSet& vars, const Rational& c);
    static Polynomial variable(const VariableSet& vars, const std::string& name);
    static Polynomial monomial(const VariableSet& vars, Monomial m, const Rational& c);

    const VariableSet& vars() const { return vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;  // -1 for the zero polynomial

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    Polynomial diff(const std::string& var, unsigned order) const;

    Rational eval(const std::map<std::string, Rational>& point) const;
    double eval(const std::map<std::string, double>& point) const;

    // Canonical rendering, reparsable by the expression parser:
    // graded-lex descending terms, explicit '*', rationals as p/q.
    std::string str() const;

    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    VariableSet vars_;
    std::map<Monomial, Rational> terms_;

    void insert_term(const Monomial& m, const Rational& c);
    void check_caps() const;
    friend class DiffOp;
};

void check_same_vars(const VariableSet& a, const VariableSet& b);

}  // namespace pde

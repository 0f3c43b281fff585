#pragma once

#include <vector>

#include "pde/polynomial.hpp"

namespace pde {

// Per-variable derivative orders; mixed partials allowed. The all-zero
// index is a pure multiplication term.
struct DerivIndex {
    std::vector<unsigned> orders;

    unsigned total_order() const;
    bool operator==(const DerivIndex& o) const { return orders == o.orders; }
    bool operator<(const DerivIndex& o) const { return orders < o.orders; }
};

struct DiffOpTerm {
    Polynomial coeff;
    DerivIndex deriv;
};

// Linear differential operator: a sum of (polynomial coefficient x partial
// derivative) terms, applied exactly to polynomials. Terms are kept as
// built; merging happens only in operator+ when DerivIndex matches.
class DiffOp {
public:
    explicit DiffOp(VariableSet vars) : vars_(std::move(vars)) {}

    // Single term c * d^k/d(var)^k.
    static DiffOp single(const VariableSet& vars, Polynomial coeff,
                         const std::string& var, unsigned order);

    const VariableSet& vars() const { return vars_; }
    const std::vector<DiffOpTerm>& terms() const { return terms_; }

    void add_term(Polynomial coeff, DerivIndex deriv);

    Polynomial apply(const Polynomial& u) const;

    DiffOp operator+(const DiffOp& o) const;

private:
    VariableSet vars_;
    std::vector<DiffOpTerm> terms_;
};

}  // namespace pde

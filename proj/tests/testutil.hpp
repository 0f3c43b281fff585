#pragma once

#include <random>

#include "pde/diffop.hpp"

namespace pde::testing {

// Deterministic generators for property-style tests.
class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Rational rational(int max_abs = 5) {
        int num = uniform(-max_abs, max_abs);
        int den = uniform(1, max_abs);
        return Rational(num, den);
    }

    Rational nonzero_rational(int max_abs = 5) {
        for (;;) {
            Rational r = rational(max_abs);
            if (r != 0) return r;
        }
    }

    Polynomial polynomial(const VariableSet& vars, int max_terms = 8, int max_degree = 6) {
        Polynomial p(vars);
        int nterms = uniform(0, max_terms);
        for (int i = 0; i < nterms; ++i) {
            Monomial m{std::vector<unsigned>(vars.size(), 0)};
            int budget = uniform(0, max_degree);
            for (std::size_t v = 0; v < vars.size() && budget > 0; ++v) {
                int e = uniform(0, budget);
                m.exps[v] = e;
                budget -= e;
            }
            p = p + Polynomial::monomial(vars, m, rational());
        }
        return p;
    }

    Polynomial nonzero_polynomial(const VariableSet& vars, int max_terms = 8,
                                  int max_degree = 6) {
        for (;;) {
            Polynomial p = polynomial(vars, max_terms, max_degree);
            if (!p.is_zero()) return p;
        }
    }

    DiffOp diff_op(const VariableSet& vars, int max_terms = 3, int max_coeff_degree = 2,
                   int max_order = 2) {
        DiffOp op(vars);
        int nterms = uniform(1, max_terms);
        for (int i = 0; i < nterms; ++i) {
            DerivIndex d{std::vector<unsigned>(vars.size(), 0)};
            d.orders[uniform(0, static_cast<int>(vars.size()) - 1)] = uniform(1, max_order);
            op.add_term(nonzero_polynomial(vars, 3, max_coeff_degree), std::move(d));
        }
        return op;
    }

private:
    std::mt19937 rng_;
};

// Test-local operator application: its own power-rule differentiation,
// independent of DiffOp::apply.
inline Polynomial naive_apply(const DiffOp& op, const Polynomial& u) {
    const VariableSet& vars = op.vars();
    Polynomial result(vars);
    for (const auto& term : op.terms()) {
        Polynomial d(vars);
        for (const auto& [m, c] : u.terms()) {
            Rational coeff = c;
            Monomial out{m.exps};
            bool vanished = false;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                for (unsigned k = 0; k < term.deriv.orders[v]; ++k) {
                    if (out.exps[v] == 0) {
                        vanished = true;
                        break;
                    }
                    coeff *= out.exps[v];
                    out.exps[v] -= 1;
                }
                if (vanished) break;
            }
            if (!vanished) d = d + Polynomial::monomial(vars, out, coeff);
        }
        result = result + term.coeff * d;
    }
    return result;
}

}  // namespace pde::testing

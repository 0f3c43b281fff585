#include "pde/diffop.hpp"

#include <map>
#include <numeric>

namespace pde {

unsigned DerivIndex::total_order() const {
    return std::accumulate(orders.begin(), orders.end(), 0u);
}

DiffOp DiffOp::single(const VariableSet& vars, Polynomial coeff,
                      const std::string& var, unsigned order) {
    auto idx = vars.index(var);
    if (!idx) throw Error("unknown variable: " + var);
    DiffOp op(vars);
    DerivIndex d{std::vector<unsigned>(vars.size(), 0)};
    d.orders[*idx] = order;
    op.add_term(std::move(coeff), std::move(d));
    return op;
}

void DiffOp::add_term(Polynomial coeff, DerivIndex deriv) {
    check_same_vars(vars_, coeff.vars());
    if (deriv.orders.size() != vars_.size())
        throw Error("derivative index arity does not match variable set");
    if (coeff.is_zero()) return;
    terms_.push_back({std::move(coeff), std::move(deriv)});
}

Polynomial DiffOp::apply(const Polynomial& u) const {
    check_same_vars(vars_, u.vars());
    Polynomial result(vars_);
    for (const auto& term : terms_) {
        Polynomial d = u;
        for (std::size_t i = 0; i < term.deriv.orders.size(); ++i)
            if (term.deriv.orders[i] > 0)
                d = d.diff(vars_.name(i), term.deriv.orders[i]);
        result = result + term.coeff * d;
    }
    return result;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    check_same_vars(vars_, o.vars_);
    std::map<DerivIndex, Polynomial> merged;
    for (const auto& list : {terms_, o.terms_}) {
        for (const auto& term : list) {
            auto it = merged.find(term.deriv);
            if (it == merged.end())
                merged.emplace(term.deriv, term.coeff);
            else
                it->second = it->second + term.coeff;
        }
    }
    DiffOp sum(vars_);
    for (auto& [deriv, coeff] : merged)
        if (!coeff.is_zero()) sum.terms_.push_back({std::move(coeff), deriv});
    return sum;
}

}  // namespace pde

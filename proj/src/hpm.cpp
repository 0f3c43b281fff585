#include "pde/hpm.hpp"

namespace pde {

TimePoly::TimePoly(VariableSet vars, std::vector<Polynomial> coeffs)
    : vars_(std::move(vars)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) check_same_vars(vars_, c.vars());
    trim();
}

void TimePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial TimePoly::at(std::size_t n) const {
    return n < coeffs_.size() ? coeffs_[n] : Polynomial(vars_);
}

TimePoly TimePoly::operator+(const TimePoly& o) const {
    check_same_vars(vars_, o.vars_);
    TimePoly r(vars_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Polynomial(vars_));
    for (std::size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] = at(n) + o.at(n);
    r.trim();
    return r;
}

TimePoly time_integrate(const TimePoly& tp, int times) {
    TimePoly cur = tp;
    for (int pass = 0; pass < times; ++pass) {
        TimePoly next(cur.vars_);
        next.coeffs_.resize(cur.coeffs_.size() + 1, Polynomial(cur.vars_));
        for (std::size_t n = 0; n < cur.coeffs_.size(); ++n)
            next.coeffs_[n + 1] = cur.coeffs_[n].scaled(Rational(1, n + 1));
        next.trim();
        cur = std::move(next);
    }
    return cur;
}

TimePoly apply_termwise(const DiffOp& L, const TimePoly& tp) {
    TimePoly r(tp.vars());
    r.coeffs_.reserve(tp.coeffs().size());
    for (const auto& c : tp.coeffs()) r.coeffs_.push_back(L.apply(c));
    r.trim();
    return r;
}

HpmExpansion hpm_heat(const HeatProblem& p, int iterations) {
    if (iterations < 1) throw Error("hpm_heat needs at least one iteration");
    const VariableSet& vars = p.L.vars();
    HpmExpansion e{Kind::heat, {}};
    e.terms.emplace_back(vars, std::vector<Polynomial>{p.u0});
    TimePoly source(vars, {apply_termwise(p.L, e.terms[0]).at(0) + p.f});
    e.terms.push_back(time_integrate(source, 1));
    for (int k = 1; k < iterations; ++k)
        e.terms.push_back(time_integrate(apply_termwise(p.L, e.terms[k]), 1));
    return e;
}

HpmExpansion hpm_wave(const WaveProblem& p, int iterations) {
    if (iterations < 1) throw Error("hpm_wave needs at least one iteration");
    const VariableSet& vars = p.L.vars();
    HpmExpansion e{Kind::wave, {}};
    e.terms.emplace_back(vars, std::vector<Polynomial>{p.u0, p.u1});
    TimePoly rhs = apply_termwise(p.L, e.terms[0]) +
                   TimePoly(vars, std::vector<Polynomial>{p.f});
    e.terms.push_back(time_integrate(rhs, 2));
    for (int k = 1; k < iterations; ++k)
        e.terms.push_back(time_integrate(apply_termwise(p.L, e.terms[k]), 2));
    return e;
}

HpmComparison hpm_equals_taylor(const HpmExpansion& e, const SeriesSolution& s) {
    if ((e.kind == Kind::heat) != (s.kind == Kind::heat))
        throw Error("hpm_equals_taylor: expansion and series kinds differ");
    const int iterations = static_cast<int>(e.terms.size()) - 1;
    const int covered = e.kind == Kind::heat ? iterations : 2 * iterations + 1;
    if (s.order() < covered)
        throw Error("hpm_equals_taylor: series order below the covered t-power");

    const VariableSet& vars = s.coeffs.front().vars();
    TimePoly sum(vars);
    for (const auto& v : e.terms) sum = sum + v;

    HpmComparison cmp;
    for (int n = 0; n <= covered; ++n) {
        if (sum.at(n) == s.coeffs[n]) continue;
        cmp.equal = false;
        cmp.mismatch_power = n;
        cmp.mismatch_term = e.kind == Kind::heat ? n : (n < 2 ? 0 : n / 2);
        break;
    }
    return cmp;
}

}  // namespace pde

#include "pde/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pde {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error("duplicate variable name: " + names_[i]);
}

std::optional<std::size_t> VariableSet::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

unsigned Monomial::total_degree() const {
    return std::accumulate(exps.begin(), exps.end(), 0u);
}

bool Monomial::operator<(const Monomial& o) const {
    unsigned da = total_degree(), db = o.total_degree();
    if (da != db) return da < db;
    // Within a degree class: later in the declared variable order sorts lower,
    // so reverse iteration yields x before y before z.
    return std::lexicographical_compare(exps.begin(), exps.end(), o.exps.begin(), o.exps.end());
}

PolyLimits& poly_limits() {
    static PolyLimits limits;
    return limits;
}

void check_same_vars(const VariableSet& a, const VariableSet& b) {
    if (a != b) throw VariableMismatchError("polynomials use different variable sets");
}

Polynomial Polynomial::constant(const VariableSet& vars, const Rational& c) {
    Polynomial p(vars);
    if (c != 0) p.terms_.emplace(Monomial{std::vector<unsigned>(vars.size(), 0)}, c);
    return p;
}

Polynomial Polynomial::variable(const VariableSet& vars, const std::string& name) {
    auto idx = vars.index(name);
    if (!idx) throw Error("unknown variable: " + name);
    Monomial m{std::vector<unsigned>(vars.size(), 0)};
    m.exps[*idx] = 1;
    return monomial(vars, m, 1);
}

Polynomial Polynomial::monomial(const VariableSet& vars, Monomial m, const Rational& c) {
    if (m.exps.size() != vars.size())
        throw Error("monomial arity does not match variable set");
    Polynomial p(vars);
    if (c != 0) p.terms_.emplace(std::move(m), c);
    p.check_caps();
    return p;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // map is graded ascending, so the last key has maximal degree
    return static_cast<int>(terms_.rbegin()->first.total_degree());
}

void Polynomial::insert_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_caps() const {
    const auto& lim = poly_limits();
    if (terms_.size() > lim.max_terms)
        throw CapError("polynomial term count exceeds cap");
    if (!terms_.empty() && terms_.rbegin()->first.total_degree() > lim.max_total_degree)
        throw CapError("polynomial total degree exceeds cap");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_vars(vars_, o.vars_);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.insert_term(m, c);
    r.check_caps();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_vars(vars_, o.vars_);
    Polynomial r(vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m{ma.exps};
            for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += mb.exps[i];
            r.insert_term(m, ca * cb);
        }
    }
    r.check_caps();
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::diff(const std::string& var, unsigned order) const {
    auto idx = vars_.index(var);
    if (!idx) throw Error("unknown variable: " + var);
    Polynomial cur = *this;
    for (unsigned k = 0; k < order; ++k) {
        Polynomial next(vars_);
        for (const auto& [m, c] : cur.terms_) {
            unsigned e = m.exps[*idx];
            if (e == 0) continue;
            Monomial dm{m.exps};
            dm.exps[*idx] = e - 1;
            next.insert_term(dm, c * e);
        }
        cur = std::move(next);
    }
    return cur;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> vals(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_.name(i));
        if (it == point.end()) throw EvalError("missing assignment for variable " + vars_.name(i));
        vals[i] = it->second;
    }
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < vals.size(); ++i)
            term *= rational_pow(vals[i], m.exps[i]);
        sum += term;
    }
    return sum;
}

double Polynomial::eval(const std::map<std::string, double>& point) const {
    std::vector<double> vals(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_.name(i));
        if (it == point.end()) throw EvalError("missing assignment for variable " + vars_.name(i));
        vals[i] = it->second;
    }
    double sum = 0;
    for (const auto& [m, c] : terms_) {
        double term = static_cast<double>(c);
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (unsigned k = 0; k < m.exps[i]; ++k) term *= vals[i];
        sum += term;
    }
    return sum;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (abs_c != 1 || m.total_degree() == 0) factors.push_back(rational_str(abs_c));
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            std::string f = vars_.name(i);
            if (m.exps[i] > 1) f += "^" + std::to_string(m.exps[i]);
            factors.push_back(std::move(f));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw Error("malformed number: " + text);
        BigInt num(digits);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(num, den);
    }
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw Error("malformed number: " + text);
    }
}

}  // namespace pde

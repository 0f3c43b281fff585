#include "pde/closedform.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pde {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Largest integer we are willing to factor during rational-root search.
const BigInt kRootSearchCap = BigInt(1000000000000LL);

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> ds;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            ds.push_back(i);
            if (i * i != n) ds.push_back(n / i);
        }
    }
    return ds;
}

Rational eval_univariate(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// All roots of a monic polynomial with rational coefficients, found by
// rational-root candidates plus deflation. nullopt when any root is
// irrational or the coefficients are too large to factor.
std::optional<std::vector<Rational>> all_rational_roots(std::vector<Rational> poly) {
    std::vector<Rational> roots;
    while (poly.size() > 1) {
        if (poly[0] == 0) {
            roots.emplace_back(0);
            poly.erase(poly.begin());
            continue;
        }
        BigInt den_lcm = 1;
        for (const auto& c : poly) den_lcm = lcm(den_lcm, denominator(c));
        BigInt lo = abs(numerator(poly.front()) * (den_lcm / denominator(poly.front())));
        BigInt hi = abs(numerator(poly.back()) * (den_lcm / denominator(poly.back())));
        if (lo > kRootSearchCap || hi > kRootSearchCap) return std::nullopt;

        bool found = false;
        for (const BigInt& p : divisors(lo)) {
            for (const BigInt& q : divisors(hi)) {
                for (int sign : {1, -1}) {
                    Rational cand(sign * p, q);
                    if (eval_univariate(poly, cand) != 0) continue;
                    roots.push_back(cand);
                    // synthetic division by (x - cand)
                    std::vector<Rational> quot(poly.size() - 1);
                    Rational carry = 0;
                    for (std::size_t k = poly.size() - 1; k >= 1; --k) {
                        quot[k - 1] = poly[k] + carry;
                        carry = quot[k - 1] * cand;
                    }
                    poly = std::move(quot);
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    // repeated roots are outside the supported closed-form class
    auto sorted = roots;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    return roots;
}

// Solves M x = rhs by exact Gaussian elimination; nullopt if singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> m,
                                                  std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

// lambda^n with 0^0 = 1.
Rational rate_pow(const Rational& rate, unsigned n) {
    if (n == 0) return 1;
    return rational_pow(rate, n);
}

}  // namespace

bool ClosedForm::operator==(const ClosedForm& o) const {
    return vars == o.vars && terms.size() == o.terms.size() &&
           std::equal(terms.begin(), terms.end(), o.terms.begin(),
                      [](const ClosedFormTerm& a, const ClosedFormTerm& b) {
                          return a.rate == b.rate && a.spatial == b.spatial;
                      });
}

std::vector<MonomialTrace> extract_traces(const SeriesSolution& s) {
    const std::size_t len = s.coeffs.size();
    std::map<Monomial, std::vector<Rational>> by_mono;
    for (std::size_t n = 0; n < len; ++n) {
        for (const auto& [m, c] : s.coeffs[n].terms()) {
            auto [it, _] = by_mono.try_emplace(m, len, Rational(0));
            it->second[n] = c;
        }
    }
    std::vector<MonomialTrace> traces;
    traces.reserve(by_mono.size());
    for (auto& [m, seq] : by_mono) traces.push_back({m, std::move(seq)});
    return traces;
}

std::optional<std::vector<Rational>> find_min_recurrence(const std::vector<Rational>& a) {
    if (a.size() < 4) throw Error("find_min_recurrence needs at least 4 entries");
    // Berlekamp-Massey over the rationals
    std::vector<Rational> conn{1}, prev{1};
    int len = 0, gap = 1;
    Rational prev_disc = 1;
    for (std::size_t n = 0; n < a.size(); ++n) {
        Rational disc = a[n];
        for (int i = 1; i <= len; ++i) disc += conn[i] * a[n - i];
        if (disc == 0) {
            ++gap;
            continue;
        }
        Rational factor = disc / prev_disc;
        if (2 * len <= static_cast<int>(n)) {
            auto keep = conn;
            if (conn.size() < prev.size() + gap) conn.resize(prev.size() + gap, 0);
            for (std::size_t i = 0; i < prev.size(); ++i) conn[i + gap] -= factor * prev[i];
            len = static_cast<int>(n) + 1 - len;
            prev = std::move(keep);
            prev_disc = disc;
            gap = 1;
        } else {
            if (conn.size() < prev.size() + gap) conn.resize(prev.size() + gap, 0);
            for (std::size_t i = 0; i < prev.size(); ++i) conn[i + gap] -= factor * prev[i];
            ++gap;
        }
    }
    if (len > static_cast<int>(a.size()) / 2) return std::nullopt;
    std::vector<Rational> rec(len);
    for (int i = 1; i <= len; ++i)
        rec[i - 1] = i < static_cast<int>(conn.size()) ? Rational(-conn[i]) : Rational(0);
    for (std::size_t n = len; n < a.size(); ++n) {
        Rational sum = 0;
        for (int i = 1; i <= len; ++i) sum += rec[i - 1] * a[n - i];
        if (sum != a[n]) return std::nullopt;
    }
    return rec;
}

std::optional<ClosedForm> recognize(const SeriesSolution& s) {
    const int N = s.order();
    if (N < 6) return std::nullopt;  // evidence floor

    const VariableSet& vars = s.coeffs.front().vars();

    std::map<Rational, Polynomial> by_rate;
    for (const auto& trace : extract_traces(s)) {
        std::vector<Rational> a(trace.seq.size());
        for (std::size_t n = 0; n < a.size(); ++n) a[n] = trace.seq[n] * factorial(n);

        auto rec = find_min_recurrence(a);
        if (!rec) return std::nullopt;
        const int len = static_cast<int>(rec->size());
        if (len == 0) continue;

        // characteristic polynomial x^len - sum_i rec[i-1] x^{len-i}
        std::vector<Rational> charpoly(len + 1, 0);
        charpoly[len] = 1;
        for (int i = 1; i <= len; ++i) charpoly[len - i] = -(*rec)[i - 1];
        auto roots = all_rational_roots(charpoly);
        if (!roots) return std::nullopt;

        // amplitudes from the first len values, then verified on the rest
        std::vector<std::vector<Rational>> vand(len, std::vector<Rational>(len));
        std::vector<Rational> rhs(len);
        for (int n = 0; n < len; ++n) {
            for (int j = 0; j < len; ++j) vand[n][j] = rate_pow((*roots)[j], n);
            rhs[n] = a[n];
        }
        auto amps = solve_linear(std::move(vand), std::move(rhs));
        if (!amps) return std::nullopt;
        for (std::size_t n = 0; n < a.size(); ++n) {
            Rational sum = 0;
            for (int j = 0; j < len; ++j) sum += (*amps)[j] * rate_pow((*roots)[j], n);
            if (sum != a[n]) return std::nullopt;
        }

        for (int j = 0; j < len; ++j) {
            if ((*amps)[j] == 0) continue;
            Polynomial piece = Polynomial::monomial(vars, trace.mono, (*amps)[j]);
            auto [it, inserted] = by_rate.try_emplace((*roots)[j], piece);
            if (!inserted) it->second = it->second + piece;
        }
    }

    ClosedForm cf{vars, {}};
    for (auto it = by_rate.rbegin(); it != by_rate.rend(); ++it)
        if (!it->second.is_zero()) cf.terms.push_back({it->first, it->second});

    // final arbiter: re-expansion must reproduce every coefficient
    auto expanded = reexpand(cf, N);
    for (int n = 0; n <= N; ++n)
        if (expanded[n].terms() != s.coeffs[n].terms()) return std::nullopt;
    return cf;
}

std::vector<Polynomial> reexpand(const ClosedForm& cf, int order) {
    std::vector<Polynomial> coeffs;
    coeffs.reserve(order + 1);
    for (int n = 0; n <= order; ++n) {
        Polynomial u(cf.vars);
        Rational inv_fact(1, factorial(n));
        for (const auto& term : cf.terms)
            u = u + term.spatial.scaled(rate_pow(term.rate, n) * inv_fact);
        coeffs.push_back(std::move(u));
    }
    return coeffs;
}

namespace {

std::string rate_arg(const Rational& rate) {
    if (rate == 1) return "t";
    if (rate == -1) return "-t";
    return rational_str(rate) + "*t";
}

// One rendered summand: sign split out so the joiner can emit " - ".
struct Piece {
    bool negative = false;
    std::string body;
};

Piece spatial_times(const Polynomial& p, const std::string& timefactor) {
    Piece piece;
    Polynomial q = p;
    if (p.terms().size() == 1 && p.terms().begin()->second < 0) {
        piece.negative = true;
        q = -p;
    }
    std::string ps = q.str();
    // parenthesized polynomials render compactly: (x^2+y^2)
    std::string compact;
    for (char c : ps)
        if (c != ' ') compact += c;
    if (timefactor.empty()) {
        piece.body = q.terms().size() > 1 ? "(" + compact + ")" : ps;
        return piece;
    }
    if (ps == "1") {
        piece.body = timefactor;
    } else if (q.terms().size() > 1) {
        piece.body = "(" + compact + ")*" + timefactor;
    } else {
        piece.body = ps + "*" + timefactor;
    }
    return piece;
}

std::string join(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out << (pieces[i].negative ? "-" : "");
        else
            out << (pieces[i].negative ? " - " : " + ");
        out << pieces[i].body;
    }
    return out.str();
}

std::vector<Piece> exponential_pieces(const ClosedForm& cf) {
    std::vector<Piece> pieces;
    for (const auto& term : cf.terms) {
        std::string tf = term.rate == 0 ? "" : "exp(" + rate_arg(term.rate) + ")";
        pieces.push_back(spatial_times(term.spatial, tf));
    }
    return pieces;
}

}  // namespace

std::string render_exponential(const ClosedForm& cf) {
    return join(exponential_pieces(cf));
}

std::string render_hyperbolic(const ClosedForm& cf) {
    std::map<Rational, Polynomial> by_rate;
    for (const auto& term : cf.terms) by_rate.emplace(term.rate, term.spatial);

    std::vector<Piece> pieces;
    auto zero_it = by_rate.find(Rational(0));
    if (zero_it != by_rate.end()) pieces.push_back(spatial_times(zero_it->second, ""));

    std::vector<Rational> paired;
    for (const auto& [rate, plus] : by_rate) {
        if (rate <= 0) continue;
        auto minus_it = by_rate.find(Rational(-rate));
        if (minus_it == by_rate.end()) continue;
        paired.push_back(rate);
        Polynomial cosh_part = plus + minus_it->second;
        Polynomial sinh_part = plus - minus_it->second;
        if (!cosh_part.is_zero())
            pieces.push_back(spatial_times(cosh_part, "cosh(" + rate_arg(rate) + ")"));
        if (!sinh_part.is_zero())
            pieces.push_back(spatial_times(sinh_part, "sinh(" + rate_arg(rate) + ")"));
    }

    // unpaired rates keep the exponential basis
    for (auto it = by_rate.rbegin(); it != by_rate.rend(); ++it) {
        const Rational& rate = it->first;
        if (rate == 0) continue;
        Rational mag = rate < 0 ? Rational(-rate) : rate;
        if (std::find(paired.begin(), paired.end(), mag) != paired.end()) continue;
        pieces.push_back(spatial_times(it->second, "exp(" + rate_arg(rate) + ")"));
    }
    return join(pieces);
}

std::string render(const ClosedForm& cf) {
    // p*(exp(lt)-1) grouping when the zero-rate part cancels the others
    const Polynomial* zero_part = nullptr;
    Polynomial others(cf.vars);
    bool has_nonzero_rate = false;
    for (const auto& term : cf.terms) {
        if (term.rate == 0) {
            zero_part = &term.spatial;
        } else {
            has_nonzero_rate = true;
            others = others + term.spatial;
        }
    }
    if (zero_part && has_nonzero_rate && *zero_part == -others) {
        std::vector<Piece> pieces;
        for (const auto& term : cf.terms) {
            if (term.rate == 0) continue;
            pieces.push_back(
                spatial_times(term.spatial, "(exp(" + rate_arg(term.rate) + ")-1)"));
        }
        return join(pieces);
    }

    bool has_pair = false;
    for (const auto& term : cf.terms) {
        if (term.rate <= 0) continue;
        for (const auto& other : cf.terms)
            if (other.rate == -term.rate) has_pair = true;
    }
    return has_pair ? render_hyperbolic(cf) : render_exponential(cf);
}

}  // namespace pde

#pragma once

#include <optional>

#include "pde/series.hpp"

namespace pde {

// Column view of a series: the coefficient of one spatial monomial in
// each u_n, absent entries recorded as 0.
struct MonomialTrace {
    Monomial mono;
    std::vector<Rational> seq;
};

struct ClosedFormTerm {
    Rational rate;  // lambda in spatial * e^{lambda t}
    Polynomial spatial;
};

// Finite sum of spatial polynomials times e^{lambda t} with rational
// rates. Rates are pairwise distinct, spatial parts nonzero; the
// exponential basis is the canonical internal form, hyperbolic output is
// presentation only.
struct ClosedForm {
    VariableSet vars;
    std::vector<ClosedFormTerm> terms;  // sorted by rate, descending

    bool operator==(const ClosedForm& o) const;
};

std::vector<MonomialTrace> extract_traces(const SeriesSolution& s);

// Shortest constant-coefficient linear recurrence
//   a_n = c_1 a_{n-1} + ... + c_L a_{n-L}  (n >= L)
// satisfied by the whole sequence; nullopt when the minimal length
// exceeds floor(len/2) (insufficient evidence). The all-zero sequence
// yields the empty recurrence (order 0).
std::optional<std::vector<Rational>> find_min_recurrence(const std::vector<Rational>& a);

// Recognizes the series as sum_j p_j(r) e^{lambda_j t}. Requires order
// >= 6; returns nullopt when any trace falls outside the supported class
// (irrational or repeated characteristic roots) or re-expansion fails to
// reproduce every coefficient.
std::optional<ClosedForm> recognize(const SeriesSolution& s);

// Taylor coefficients of the closed form: u_n = sum_j p_j lambda_j^n / n!.
std::vector<Polynomial> reexpand(const ClosedForm& cf, int order);

std::string render_exponential(const ClosedForm& cf);

// Rewrites rate pairs {+a,-a} as cosh/sinh when that does not increase
// the term count; otherwise leaves the exponential basis.
std::string render_hyperbolic(const ClosedForm& cf);

// Display form used in reports: prefers p*(exp(lt)-1) grouping when the
// zero-rate part is exactly minus the sum of the others, then the
// hyperbolic rewrite, then plain exponentials.
std::string render(const ClosedForm& cf);

}  // namespace pde

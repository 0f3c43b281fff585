#pragma once

#include "pde/series.hpp"

namespace pde {

// Polynomial in t with spatial-polynomial coefficients; index = power of t.
// Trailing zero entries are trimmed so equality is canonical.
class TimePoly {
public:
    explicit TimePoly(VariableSet vars) : vars_(std::move(vars)) {}
    TimePoly(VariableSet vars, std::vector<Polynomial> coeffs);

    const VariableSet& vars() const { return vars_; }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // spatial coefficient at t^n (zero beyond the stored range)
    Polynomial at(std::size_t n) const;

    TimePoly operator+(const TimePoly& o) const;
    bool operator==(const TimePoly& o) const {
        return vars_ == o.vars_ && coeffs_ == o.coeffs_;
    }

private:
    VariableSet vars_;
    std::vector<Polynomial> coeffs_;

    void trim();
    friend TimePoly time_integrate(const TimePoly&, int);
    friend TimePoly apply_termwise(const DiffOp&, const TimePoly&);
};

// Definite integral from 0 to t, applied `times` times; integration
// constants are zero.
TimePoly time_integrate(const TimePoly& tp, int times);

TimePoly apply_termwise(const DiffOp& L, const TimePoly& tp);

// The homotopy-perturbation correction terms v_0..v_K at p = 1.
// For heat problems v_k lives entirely at t-power k; for wave problems
// v_0 occupies powers {0,1} and v_k (k>=1) powers {2k, 2k+1}.
struct HpmExpansion {
    Kind kind;
    std::vector<TimePoly> terms;
};

HpmExpansion hpm_heat(const HeatProblem& p, int iterations);
HpmExpansion hpm_wave(const WaveProblem& p, int iterations);

struct HpmComparison {
    bool equal = true;
    int mismatch_term = -1;   // index k of the diverging v_k
    int mismatch_power = -1;  // first diverging power of t
};

// Checks that the t-power-wise sum of the v_k equals the series
// coefficients over the whole range the expansion covers.
HpmComparison hpm_equals_taylor(const HpmExpansion& e, const SeriesSolution& s);

}  // namespace pde

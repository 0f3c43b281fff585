#pragma once

#include <optional>

#include "pde/diffop.hpp"

namespace pde {

enum class Kind { heat, wave };

// du/dt = L u + f, with u(.,0) = u0.
struct HeatProblem {
    DiffOp L;
    Polynomial f;
    Polynomial u0;
};

// d2u/dt2 = L u + f, with u(.,0) = u0 and du/dt(.,0) = u1.
struct WaveProblem {
    DiffOp L;
    Polynomial f;
    Polynomial u0;
    Polynomial u1;
};

// Truncated time-power series: u(r,t) ~ sum_{n=0..N} coeffs[n](r) t^n.
struct SeriesSolution {
    Kind kind;
    std::vector<Polynomial> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// u_{n+1} = (L u_n + f*[n==0]) / (n+1)
Polynomial heat_step(const DiffOp& L, const Polynomial& f, const Polynomial& u_n, int n);

// u_{n+2} = (L u_n + f*[n==0]) / ((n+1)(n+2))
Polynomial wave_step(const DiffOp& L, const Polynomial& f, const Polynomial& u_n, int n);

SeriesSolution solve_heat(const HeatProblem& p, int order);
SeriesSolution solve_wave(const WaveProblem& p, int order);

// Horner evaluation in t; exact in the rational overload.
Rational series_eval(const SeriesSolution& s, const std::map<std::string, Rational>& point,
                     const Rational& t);
double series_eval(const SeriesSolution& s, const std::map<std::string, double>& point,
                   double t);

// Substitutes the truncated series into its PDE and returns the lowest
// t-degree with a nonzero residual coefficient; nullopt when the residual
// vanishes identically. By construction the floor is >= order for heat
// and >= order-1 for wave.
std::optional<int> residual_floor(const SeriesSolution& s, const HeatProblem& p);
std::optional<int> residual_floor(const SeriesSolution& s, const WaveProblem& p);

}  // namespace pde

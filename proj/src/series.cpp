#include "pde/series.hpp"

namespace pde {

Polynomial heat_step(const DiffOp& L, const Polynomial& f, const Polynomial& u_n, int n) {
    check_same_vars(L.vars(), u_n.vars());
    check_same_vars(L.vars(), f.vars());
    Polynomial rhs = L.apply(u_n);
    if (n == 0) rhs = rhs + f;
    return rhs.scaled(Rational(1, n + 1));
}

Polynomial wave_step(const DiffOp& L, const Polynomial& f, const Polynomial& u_n, int n) {
    check_same_vars(L.vars(), u_n.vars());
    check_same_vars(L.vars(), f.vars());
    Polynomial rhs = L.apply(u_n);
    if (n == 0) rhs = rhs + f;
    return rhs.scaled(Rational(1, BigInt(n + 1) * (n + 2)));
}

SeriesSolution solve_heat(const HeatProblem& p, int order) {
    if (order < 1) throw Error("heat series order must be >= 1");
    SeriesSolution s{Kind::heat, {p.u0}};
    s.coeffs.reserve(order + 1);
    for (int n = 0; n < order; ++n)
        s.coeffs.push_back(heat_step(p.L, p.f, s.coeffs[n], n));
    return s;
}

SeriesSolution solve_wave(const WaveProblem& p, int order) {
    if (order < 2) throw Error("wave series order must be >= 2");
    SeriesSolution s{Kind::wave, {p.u0, p.u1}};
    s.coeffs.reserve(order + 1);
    for (int n = 0; n + 2 <= order; ++n)
        s.coeffs.push_back(wave_step(p.L, p.f, s.coeffs[n], n));
    return s;
}

Rational series_eval(const SeriesSolution& s, const std::map<std::string, Rational>& point,
                     const Rational& t) {
    Rational acc = 0;
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it)
        acc = acc * t + it->eval(point);
    return acc;
}

double series_eval(const SeriesSolution& s, const std::map<std::string, double>& point,
                   double t) {
    double acc = 0;
    for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it)
        acc = acc * t + it->eval(point);
    return acc;
}

std::optional<int> residual_floor(const SeriesSolution& s, const HeatProblem& p) {
    if (s.kind != Kind::heat) throw Error("residual_floor: series is not a heat solution");
    const int N = s.order();
    // residual coefficient at t^m:
    //   (m+1) u_{m+1} - L u_m - f*[m==0]   for m < N
    //   -L u_N                              for m = N
    for (int m = 0; m <= N; ++m) {
        Polynomial r = -p.L.apply(s.coeffs[m]);
        if (m == 0) r = r - p.f;
        if (m < N) r = r + s.coeffs[m + 1].scaled(m + 1);
        if (!r.is_zero()) return m;
    }
    return std::nullopt;
}

std::optional<int> residual_floor(const SeriesSolution& s, const WaveProblem& p) {
    if (s.kind != Kind::wave) throw Error("residual_floor: series is not a wave solution");
    const int N = s.order();
    // residual coefficient at t^m:
    //   (m+1)(m+2) u_{m+2} - L u_m - f*[m==0]   for m <= N-2
    //   -L u_m                                   for m in {N-1, N}
    for (int m = 0; m <= N; ++m) {
        Polynomial r = -p.L.apply(s.coeffs[m]);
        if (m == 0) r = r - p.f;
        if (m + 2 <= N) r = r + s.coeffs[m + 2].scaled(BigInt(m + 1) * (m + 2));
        if (!r.is_zero()) return m;
    }
    return std::nullopt;
}

}  // namespace pde

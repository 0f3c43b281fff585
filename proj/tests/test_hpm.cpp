#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pde/corpus.hpp"
#include "pde/hpm.hpp"
#include "testutil.hpp"

using namespace pde;
using pde::testing::Gen;

namespace {

const CorpusEntry& entry(const std::string& id) {
    for (const auto& e : corpus())
        if (e.id == id) return e;
    throw std::runtime_error("no such corpus entry: " + id);
}

}  // namespace

TEST_CASE("time_integrate") {
    const VariableSet vx({"x"});
    Polynomial p = parse_poly("x^2", vx);
    TimePoly tp(vx, {p});

    auto once = time_integrate(tp, 1);
    CHECK(once.at(0).is_zero());
    CHECK(once.at(1) == p);

    TimePoly linear(vx, {Polynomial(vx), p});
    auto integrated = time_integrate(linear, 1);
    CHECK(integrated.at(2) == p.scaled(Rational(1, 2)));

    auto twice = time_integrate(tp, 2);
    CHECK(twice.at(2) == p.scaled(Rational(1, 2)));
}

TEST_CASE("hpm_heat iterates") {
    auto p = build_heat(entry("example1").spec);
    auto e = hpm_heat(p, 2);
    REQUIRE(e.terms.size() == 3);
    Polynomial x2 = parse_poly("x^2", p.L.vars());
    CHECK(e.terms[0].at(0) == x2);
    CHECK(e.terms[1].at(1) == x2);
    CHECK(e.terms[2].at(2) == x2.scaled(Rational(1, 2)));

    auto p3 = build_heat(entry("example3").spec);
    auto e3 = hpm_heat(p3, 1);
    CHECK(e3.terms[0].is_zero());
    CHECK(e3.terms[1].at(1) == p3.f);

    const VariableSet vx({"x"});
    HeatProblem zero{DiffOp(vx), Polynomial(vx), Polynomial(vx)};
    for (const auto& v : hpm_heat(zero, 4).terms) CHECK(v.is_zero());
}

TEST_CASE("hpm_wave iterates") {
    auto p4 = build_wave(entry("example4").spec);
    auto e4 = hpm_wave(p4, 1);
    Polynomial x = parse_poly("x", p4.L.vars());
    Polynomial x2 = parse_poly("x^2", p4.L.vars());
    CHECK(e4.terms[0].at(0) == x);
    CHECK(e4.terms[0].at(1) == x2);
    CHECK(e4.terms[1].at(2).is_zero());
    CHECK(e4.terms[1].at(3) == x2.scaled(Rational(1, 6)));

    auto p6 = build_wave(entry("example6").spec);
    auto e6 = hpm_wave(p6, 1);
    CHECK(e6.terms[0].at(0).is_zero());
    CHECK(e6.terms[0].at(1) == p6.u1);
    CHECK(e6.terms[1].at(2) == p6.f.scaled(Rational(1, 2)));
    CHECK(e6.terms[1].at(3) == p6.u1.scaled(Rational(1, 6)));
}

TEST_CASE("expansion shape invariants") {
    for (const auto& e : corpus()) {
        if (e.spec.kind == Kind::heat) {
            auto exp = hpm_heat(build_heat(e.spec), 6);
            for (std::size_t k = 0; k < exp.terms.size(); ++k)
                for (std::size_t n = 0; n < exp.terms[k].coeffs().size(); ++n)
                    if (n != k) CHECK(exp.terms[k].at(n).is_zero());
        } else {
            auto exp = hpm_wave(build_wave(e.spec), 6);
            for (std::size_t n = 0; n < exp.terms[0].coeffs().size(); ++n)
                if (n > 1) CHECK(exp.terms[0].at(n).is_zero());
            for (std::size_t k = 1; k < exp.terms.size(); ++k)
                for (std::size_t n = 0; n < exp.terms[k].coeffs().size(); ++n)
                    if (n != 2 * k && n != 2 * k + 1) CHECK(exp.terms[k].at(n).is_zero());
        }
    }
}

TEST_CASE("hpm equals the Taylor series on the corpus") {
    for (const auto& e : corpus()) {
        if (e.spec.kind == Kind::heat) {
            auto p = build_heat(e.spec);
            auto cmp = hpm_equals_taylor(hpm_heat(p, 8), solve_heat(p, 8));
            CHECK_MESSAGE(cmp.equal, e.id);
        } else {
            auto p = build_wave(e.spec);
            auto cmp = hpm_equals_taylor(hpm_wave(p, 4), solve_wave(p, 9));
            CHECK_MESSAGE(cmp.equal, e.id);
        }
    }
}

TEST_CASE("term-by-term equivalence with the recurrence") {
    Gen gen(30);
    const VariableSet vxy({"x", "y"});
    for (int i = 0; i < 40; ++i) {
        DiffOp L = gen.diff_op(vxy);
        Polynomial f = gen.polynomial(vxy, 4, 4);
        if (i % 2 == 0) {
            HeatProblem p{L, f, gen.polynomial(vxy, 4, 4)};
            auto e = hpm_heat(p, 6);
            auto s = solve_heat(p, 6);
            for (int k = 0; k <= 6; ++k) {
                // v_k = u_k t^k
                for (std::size_t n = 0; n < e.terms[k].coeffs().size(); ++n)
                    CHECK(e.terms[k].at(n) ==
                          (static_cast<int>(n) == k ? s.coeffs[k] : Polynomial(vxy)));
            }
        } else {
            WaveProblem p{L, f, gen.polynomial(vxy, 4, 4), gen.polynomial(vxy, 4, 4)};
            auto e = hpm_wave(p, 4);
            auto s = solve_wave(p, 9);
            CHECK(e.terms[0].at(0) == s.coeffs[0]);
            CHECK(e.terms[0].at(1) == s.coeffs[1]);
            for (int k = 1; k <= 4; ++k) {
                CHECK(e.terms[k].at(2 * k) == s.coeffs[2 * k]);
                CHECK(e.terms[k].at(2 * k + 1) == s.coeffs[2 * k + 1]);
            }
        }
    }
}

TEST_CASE("a perturbed series is detected") {
    auto p = build_heat(entry("example1").spec);
    auto s = solve_heat(p, 8);
    s.coeffs[2] = s.coeffs[2] + parse_poly("x", p.L.vars());
    auto cmp = hpm_equals_taylor(hpm_heat(p, 8), s);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.mismatch_power == 2);
    CHECK(cmp.mismatch_term == 2);
}

TEST_CASE("kind mismatch is rejected") {
    auto p = build_heat(entry("example1").spec);
    auto e = hpm_heat(p, 3);
    auto s = solve_heat(p, 8);
    CHECK_THROWS_AS(hpm_equals_taylor(e, SeriesSolution{Kind::wave, s.coeffs}), Error);
    CHECK_THROWS_AS(hpm_equals_taylor(e, solve_heat(p, 2)), Error);
}

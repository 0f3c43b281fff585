#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pde/parser.hpp"
#include "testutil.hpp"

using namespace pde;
using pde::testing::Gen;

namespace {
const VariableSet kX({"x"});
const VariableSet kXYZ({"x", "y", "z"});

Polynomial P(const std::string& text, const VariableSet& vars = kXYZ) {
    return parse_poly(text, vars);
}
}  // namespace

TEST_CASE("addition") {
    CHECK((P("x^2") + P("-x^2")).is_zero());
    CHECK(P("x^2 + y^2") + P("z^2") == P("x^2 + y^2 + z^2"));
    // f of the three-variable source-term example
    CHECK((P("x^2 + y^2") + P("z^2")).str() == "x^2 + y^2 + z^2");
    CHECK_THROWS_AS(P("x^2", kX) + P("x^2", kXYZ), VariableMismatchError);
}

TEST_CASE("multiplication") {
    CHECK(P("x^2") * P("x^2") == P("x^4"));
    CHECK(P("x^4*y^4") * P("z^4") == P("x^4*y^4*z^4"));
    CHECK((P("x^2 + y^2") * Polynomial(kXYZ)).is_zero());
}

TEST_CASE("scaling") {
    CHECK(P("x^2").scaled(Rational(1, 2)) == P("1/2*x^2"));
    CHECK(P("x^4*y^4*z^4").scaled(Rational(1, 2)) == P("1/2*x^4*y^4*z^4"));
    CHECK(P("x^2 - y").scaled(1) == P("x^2 - y"));
    CHECK(P("x^2 - y").scaled(0).is_zero());
}

TEST_CASE("differentiation") {
    CHECK(P("x^4").diff("x", 2) == P("12*x^2"));
    CHECK(P("y^2").diff("x", 2).is_zero());
    CHECK(P("x^2").diff("x", 2) == P("2"));
    CHECK_THROWS_AS(P("x^2").diff("w", 1), Error);
}

TEST_CASE("evaluation") {
    std::map<std::string, Rational> origin{{"x", 0}, {"y", 0}, {"z", 0}};
    CHECK(P("x^2", kX).eval(std::map<std::string, Rational>{{"x", 1}}) == 1);
    CHECK(P("x^2 + y^2").eval(origin) == 0);
    CHECK(P("1/2*x^2", kX).eval(std::map<std::string, Rational>{{"x", 2}}) == 2);
    CHECK_THROWS_AS(P("x^2").eval(std::map<std::string, Rational>{{"x", 1}}), EvalError);
}

TEST_CASE("zero test") {
    CHECK(Polynomial(kX).is_zero());
    CHECK((P("x", kX) - P("x", kX)).is_zero());
    CHECK_FALSE(P("x^2", kX).is_zero());
}

TEST_CASE("degree and term caps") {
    auto saved = poly_limits();
    poly_limits().max_total_degree = 8;
    CHECK_THROWS_AS(P("x^3") * P("x^3") * P("x^3"), CapError);
    poly_limits() = saved;
}

TEST_CASE("ring laws on random polynomials") {
    Gen gen(1);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = gen.polynomial(kXYZ), b = gen.polynomial(kXYZ),
                   c = gen.polynomial(kXYZ);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("Leibniz rule") {
    Gen gen(2);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = gen.polynomial(kXYZ), b = gen.polynomial(kXYZ);
        CHECK((a * b).diff("y", 1) == a.diff("y", 1) * b + a * b.diff("y", 1));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Gen gen(3);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = gen.polynomial(kXYZ), b = gen.polynomial(kXYZ);
        std::map<std::string, Rational> pt{
            {"x", gen.rational()}, {"y", gen.rational()}, {"z", gen.rational()}};
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
}

TEST_CASE("add then subtract restores the canonical form") {
    Gen gen(4);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = gen.polynomial(kXYZ), b = gen.polynomial(kXYZ);
        CHECK((a + b) - b == a);
        CHECK(((a + b) - b).terms() == a.terms());
    }
}

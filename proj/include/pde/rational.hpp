#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace pde {

// Exact arbitrary-precision rational. Always reduced, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned n) {
    Rational r = 1;
    for (unsigned k = 0; k < n; ++k) r *= base;
    return r;
}

// Serialized form is "p" or "p/q".
inline std::string rational_str(const Rational& r) {
    return r.str();
}

// Accepts "p", "p/q" and plain decimals like "0.25" or "-1.5".
Rational parse_rational(const std::string& text);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VariableMismatchError : Error {
    using Error::Error;
};

struct CapError : Error {
    using Error::Error;
};

struct EvalError : Error {
    using Error::Error;
};

}  // namespace pde

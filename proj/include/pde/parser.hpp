#pragma once

#include <string>

#include "pde/diffop.hpp"

namespace pde {

// Syntax error with the 1-based character position in the input.
struct ParseError : Error {
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// Grammar: rational literals (integer or a/b), variables, binary + - *,
// unary -, ^ with non-negative integer exponent, parentheses. '/' is only
// valid between two integer literals.
Polynomial parse_poly(const std::string& text, const VariableSet& vars);

// Operator grammar: terms joined by + or -, each term a product of
// polynomial factors and exactly one D(var, order) token.
DiffOp parse_operator(const std::string& text, const VariableSet& vars);

}  // namespace pde

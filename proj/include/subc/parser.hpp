#pragma once

#include "subc/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace subc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

// Parses expressions over the grammar: signed integer/rational coefficients,
// named variables, '*', '^' with positive integer exponents, '+'/'-', and
// parentheses. parse(print(e)) is the identity on canonical forms.
PolyQ parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace subc

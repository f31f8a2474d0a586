#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "reesd/poly.hpp"

namespace reesd {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial expression parser: integer/rational coefficients, variables from
// `ctx` (with x, y accepted for x1, x2), operators + - * ^, parentheses,
// optional * between factors, insignificant whitespace. Errors carry
// line:column positions.
CommPoly parse_polynomial(const std::string& text, const RingCtx& ctx);

// Ideal file body: three polynomials, one per line; '#' starts a comment and
// blank lines are skipped.
std::vector<CommPoly> parse_ideal_text(const std::string& text, const RingCtx& ctx);

}  // namespace reesd

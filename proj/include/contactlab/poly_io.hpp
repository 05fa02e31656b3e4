#pragma once

#include <string>
#include <vector>

#include "contactlab/multipoly.hpp"

namespace contactlab {

// Variables admitted by the CLI polynomial grammar.
const std::vector<std::string>& grammar_variables();

/// Parses the polynomial text grammar: variables x0 x1 x2 y0 y1 y2 s t,
/// integer or p/q rational literals, operators + - * ^, parentheses,
/// whitespace insignificant. Throws ParseError with a 1-based byte offset.
MultiPoly parse_poly(const std::string& text);

// Same grammar with a caller-supplied variable set (used internally for
// chart polynomials in tests and tools).
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& allowed_vars);

}  // namespace contactlab

#pragma once

#include <map>
#include <string>
#include <utility>

#include "ellspec/ratfunc.hpp"

namespace ellspec {

// Text grammar shared by curve files and the CLI: integer and fraction
// literals, one variable symbol, + - * / ^ ( ). '^' takes a nonnegative
// integer exponent. ParseError messages carry a column number.
RatFunc parse_ratfunc(const std::string& text, const std::string& var);

// Same grammar with two variable symbols and division restricted to nonzero
// constants; used for homogeneous forms in (x, y).
using BivarPoly = std::map<std::pair<int, int>, Rational>;  // (i, j) -> coeff of v1^i v2^j
BivarPoly parse_bivar(const std::string& text, const std::string& v1, const std::string& v2);

} // namespace ellspec

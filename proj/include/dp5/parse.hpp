#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dp5/mpoly.hpp"
#include "dp5/upoly.hpp"

namespace dp5 {

/// Parses a polynomial over the declared variables. Accepts integer and a/b
/// literals, + - * ^ and parentheses; two parenthesized groups may be
/// juxtaposed, "(x+1)(x-1)". Throws InvalidInput naming the position.
MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

QPoly parse_univariate(std::string_view text, const std::string& var = "x");

/// Printer matching the parser: to_string(QPoly) with "^" powers.
std::string format_univariate(const QPoly& p, const std::string& var = "x");

}  // namespace dp5

#pragma once

#include "rf/cyclotomic.hpp"
#include "rf/hompoly.hpp"
#include "rf/mpoly.hpp"

#include <string>
#include <vector>

namespace rf {

// Grammar: sums and products of u0, u1, integers, i, zeta(N), with + - * / ^
// and parentheses. Division is allowed only by constants. Whitespace is ignored.
MPoly<Cyclotomic> parse_expression(const std::string& text);
// Same grammar over the given variable names.
MPoly<Cyclotomic> parse_expression(const std::string& text, const std::vector<std::string>& names);

// Parses a nonzero homogeneous polynomial in u0, u1.
HomPoly parse_poly(const std::string& text);

// Parses a constant expression in i and zeta(N).
Cyclotomic parse_scalar(const std::string& text);

}  // namespace rf

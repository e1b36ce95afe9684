#pragma once

#include <string_view>

#include "riordan/series.hpp"

namespace riordan {

// Evaluate an arithmetic expression as an exact series truncated at the
// given order. Grammar: rational literals, x, + - * / ^ ( ), sqrt(...);
// no implicit multiplication and no variables besides x. Exponents are
// nonnegative integers. Division requires a denominator with a nonzero
// constant term (ZeroConstantTerm); syntax errors throw ParseError.
Series parse_series_expr(std::string_view text, int order);

}  // namespace riordan

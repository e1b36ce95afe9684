#pragma once

#include <string>

#include "riordan/matrix.hpp"
#include "riordan/poly.hpp"
#include "riordan/series.hpp"

namespace riordan {

// JSON interchange. Rationals travel as decimal fraction strings "p/q"
// ("p" when q = 1); a series is {"order": N, "coeffs": [...]}, a matrix is
// {"rows": R, "entries": [[...row...], ...]}, a polynomial is the bare
// coefficient array. Malformed input throws ParseError.

std::string series_to_json(const Series& a, int indent = -1);
Series series_from_json(const std::string& text);

std::string matrix_to_json(const Matrix& m, int indent = -1);
Matrix matrix_from_json(const std::string& text);

std::string poly_to_json(const Poly& p);
Poly poly_from_json(const std::string& text);

// CSV: one row per line, "p/q" cells.
std::string matrix_to_csv(const Matrix& m);
std::string series_to_csv(const Series& a);

// Human-readable forms for the CLI's default output.
std::string series_pretty(const Series& a);
std::string poly_pretty(const Poly& p);
std::string matrix_pretty(const Matrix& m);

}  // namespace riordan

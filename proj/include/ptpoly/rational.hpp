#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ptpoly {

using Rational = mpq_class;

/// Parses "a/b", an integer, or a decimal literal ("-0.125", "1e-3") exactly.
/// Decimals never pass through binary floating point.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

/// Exact sign of a + b*sqrt(d), d >= 0.
int sign_of_sum_with_sqrt(const Rational& a, const Rational& b, const Rational& d);

}  // namespace ptpoly

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace tsent {

// Exact rational scalar used by the polyhedral machinery and the
// exact-mode entropy computations.
using Rational = mpq_class;

inline double to_double(const Rational& r) { return r.get_d(); }

// "3/10", "-7", "0.25" and plain integers are accepted.
std::optional<Rational> parse_rational(std::string_view text);

// Canonical form: "num" or "num/den" with den > 0.
std::string rational_to_string(const Rational& r);

// High-precision decimal rendering (used when a bound is irrational).
// Returns a rational equal to the value rounded to `digits` significant
// decimal digits.
Rational decimal_snap(double value, int digits);

// x^e for integer e (e may be negative, x nonzero).
Rational rational_pow(const Rational& x, long e);

}  // namespace tsent

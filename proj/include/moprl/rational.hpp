#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace moprl {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator after every arithmetic operation; construction from
// raw integers goes through make_rational below so the same invariant holds
// everywhere.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" (q > 0, no leading zeros in q). Rejects anything else,
// in particular zero denominators and floating-point syntax.
Rational rational_from_string(std::string_view text);

bool looks_like_rational(std::string_view text);

std::string to_string(const Rational& value);

// Decimal rendering for plotting annotations. Pure integer arithmetic,
// round-half-up at the last kept digit, trailing zeros stripped.
std::string decimal_string(const Rational& value, int significant_digits = 12);

inline int sign_of(const Rational& value) { return sgn(value); }

inline Rational abs_value(const Rational& value) { return abs(value); }

}  // namespace moprl

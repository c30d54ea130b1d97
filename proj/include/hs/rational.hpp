#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hs {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Parses "p", "-p" or "p/q" (any representative; result is canonicalised).
/// Throws ParseError.
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, unsigned long exponent);
Integer factorial(unsigned long n);

/// Fixed-point rendering with `digits` digits after the point, rounded half
/// away from zero.
std::string to_fixed(const Rational& x, int digits);

enum class Rounding { half_away_from_zero, toward_zero };

/// Rendering with `sig` significant figures, e.g. "1.0023779" or
/// "1.1370e-13". toward_zero truncates the digit string instead.
std::string to_significant(const Rational& x, int sig, Rounding mode = Rounding::half_away_from_zero);

}  // namespace hs

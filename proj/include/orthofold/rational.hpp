#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orthofold {

// Exact arbitrary-precision fraction, always in lowest terms.
using Rational = mpq_class;

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

// Accepts an optional '-' followed by digits, optionally "/digits".
// Throws ParseError (with an empty path) on anything else.
Rational parse_rational(std::string_view text);

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = a + b;
  m /= 2;
  return m;
}

inline int sign_of(const Rational& value) { return sgn(value); }

}  // namespace orthofold

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace llv {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational number, always canonical (lowest terms, positive denominator).
///
/// GMP's mpq_class keeps results of arithmetic canonical; values built from
/// raw numerator/denominator pairs must go through make_rational().
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q" or "-p/q" (decimal, no whitespace inside).
Rational parse_rational(std::string_view text);

/// Formats as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace llv

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace convdec {

/// Exact scalar used for every coordinate and weight. GMP keeps results of
/// arithmetic canonical (lowest terms, positive denominator); values built
/// from a raw numerator/denominator pair go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Accepts "p", "p/q" and "-p/q" with optional surrounding whitespace.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Smallest integer r with r*r >= n.
std::uint64_t ceil_sqrt(std::uint64_t n);

/// Smallest integer not below value.
Integer ceil(const Rational& value);

} // namespace convdec

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pacert {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);
Integer parse_integer(const std::string& s);

// Number of decimal digits of |z| (1 for zero).
std::size_t decimal_digits(const Integer& z);

// q > 0 rendered with `digits` significant decimal digits, round-half-up.
std::string format_significant(const Rational& q, int digits);

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL);
std::string hex64(std::uint64_t h);

} // namespace pacert

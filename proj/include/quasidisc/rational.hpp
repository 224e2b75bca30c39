#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace quasidisc {

/// Exact rational scalar. GMP keeps it canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

/// value^exponent for any integer exponent; a negative exponent requires value != 0.
Rational pow(const Rational& value, long exponent);

/// Same, with an arbitrary-precision exponent. Throws std::overflow_error when
/// the exponent does not fit a long and |value| is not 0 or 1.
Rational pow(const Rational& value, const Integer& exponent);

/// num/den in canonical form; den != 0.
Rational ratio(long num, long den);

/// (-1)^exponent.
int sign_power(const Integer& exponent);

bool is_integer(const Rational& value);

/// True when value is an integer <= 0.
bool is_nonpositive_integer(const Rational& value);

/// Binomial coefficient C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

}  // namespace quasidisc

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tilebench {

/// Exact rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den in canonical form.
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p" or "-p/q". Decimal input is rejected on purpose:
/// every quantity that feeds a floor or an equality check must be exact.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Shortest exact decimal when the expansion terminates within
/// `significant` digits, otherwise rounded to `significant` significant digits.
std::string to_decimal(const Rational& value, int significant = 12);

/// floor(value) as an integer.
BigInt floor_of(const Rational& value);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace tilebench

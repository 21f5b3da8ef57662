#include "tilebench/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tilebench {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("expected a rational of the form p/q, got '" + std::string(text) + "'");
  BigInt n(strip_plus(num)), d(strip_plus(den));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt floor_of(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) throw std::invalid_argument("significant digits must be positive");
  if (value == 0) return "0";
  const bool negative = value < 0;
  Rational mag = abs(value);

  // Exponent e with 10^e <= mag < 10^(e+1).
  long e = 0;
  {
    Rational probe = mag;
    while (probe >= 10) { probe /= 10; ++e; }
    while (probe < 1) { probe *= 10; --e; }
  }

  // Terminating expansions with few enough digits are printed exactly.
  BigInt den = mag.get_den();
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  long frac_digits = 0;
  bool exact = false;
  if (den == 1) {
    Rational scaled = mag;
    while (scaled.get_den() != 1) { scaled *= 10; ++frac_digits; }
    // Integers always print exactly; otherwise every digit of the scaled
    // numerator is significant.
    exact = frac_digits == 0 || static_cast<long>(scaled.get_num().get_str().size()) <= significant;
  }

  BigInt scaled_int;
  long point;  // digits after the decimal point
  if (exact) {
    point = frac_digits;
    Rational s = mag;
    for (long i = 0; i < point; ++i) s *= 10;
    scaled_int = s.get_num();
  } else {
    point = significant - 1 - e;
    Rational s = mag;
    if (point >= 0) {
      for (long i = 0; i < point; ++i) s *= 10;
    } else {
      for (long i = 0; i < -point; ++i) s /= 10;
    }
    // Round half away from zero.
    s += Rational(1, 2);
    scaled_int = floor_of(s);
    if (point < 0) {
      for (long i = 0; i < -point; ++i) scaled_int *= 10;
      point = 0;
    }
    // Drop trailing zeros in the fractional part.
    while (point > 0 && scaled_int % 10 == 0) { scaled_int /= 10; --point; }
  }

  std::string digits = scaled_int.get_str();
  if (point > 0) {
    if (static_cast<long>(digits.size()) <= point) digits.insert(0, static_cast<std::size_t>(point - digits.size() + 1), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(point), 1, '.');
  }
  return negative ? "-" + digits : digits;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace tilebench

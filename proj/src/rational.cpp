#include "quasidisc/rational.hpp"

#include <limits>
#include <stdexcept>

namespace quasidisc {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_digits = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part.front() == '-' || part.front() == '+')) {
      part.remove_prefix(1);
    }
    if (part.empty()) return false;
    for (char ch : part) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_digits(num, true) || !is_digits(den, false)) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  Integer n(num.front() == '+' ? num.substr(1) : num);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& value, long exponent) {
  if (exponent < 0) {
    if (value == 0) throw std::domain_error("negative power of zero");
    Rational inv = 1 / value;
    return pow(inv, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

Rational pow(const Rational& value, const Integer& exponent) {
  if (exponent.fits_slong_p()) return pow(value, exponent.get_si());
  if (value == 0) {
    if (exponent < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  if (value == 1) return 1;
  if (value == -1) return sign_power(exponent);
  throw std::overflow_error("exponent " + exponent.get_str() + " too large");
}

Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational out{Integer(num), Integer(den)};
  out.canonicalize();
  return out;
}

int sign_power(const Integer& exponent) { return mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1; }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool is_nonpositive_integer(const Rational& value) { return is_integer(value) && value <= 0; }

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace quasidisc

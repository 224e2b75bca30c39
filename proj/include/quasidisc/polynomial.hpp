#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "quasidisc/rational.hpp"

namespace quasidisc {

/// Degree of a polynomial; std::nullopt stands for the degree of zero (-infinity).
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals, coefficients stored
/// low-to-high and always trimmed so the last stored coefficient is nonzero.
/// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(std::initializer_list<Rational> coefficients);
  explicit Polynomial(std::vector<Rational> coefficients);

  /// c * x^power.
  static Polynomial monomial(const Rational& c, std::size_t power);
  static Polynomial x() { return monomial(1, 1); }

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] Degree degree() const noexcept;
  /// Degree, throwing DegreeTooLowError for the zero polynomial.
  [[nodiscard]] std::size_t checked_degree() const;
  [[nodiscard]] Rational leading() const;
  [[nodiscard]] Rational constant() const;
  /// Coefficient of x^power, zero beyond the degree.
  [[nodiscard]] Rational operator[](std::size_t power) const;
  [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  [[nodiscard]] Rational operator()(const Rational& x0) const;
  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Polynomial pow(unsigned exponent) const;
  /// Multiplies by x^power.
  [[nodiscard]] Polynomial shifted(std::size_t power) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend Polynomial operator-(Polynomial p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

  /// Coefficients low-to-high as "p/q" strings.
  [[nodiscard]] std::vector<std::string> to_strings() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
DivMod divmod(const Polynomial& num, const Polynomial& den);

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Degree, leading coefficient and constant term in one report. For the zero
/// polynomial `degree` is empty and `leading` is zero.
struct DegreeLeadConst {
  Degree degree;
  Rational leading;
  Rational constant;
};

DegreeLeadConst degree_leading_constant(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace quasidisc

#include "quasidisc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "quasidisc/errors.hpp"

namespace quasidisc {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  if (c == 0) return {};
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Degree Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::size_t Polynomial::checked_degree() const {
  if (coeffs_.empty()) throw DegreeTooLowError("zero polynomial has no degree");
  return coeffs_.size() - 1;
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::constant() const { return coeffs_.empty() ? Rational(0) : coeffs_.front(); }

Rational Polynomial::operator[](std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x0) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::shifted(std::size_t power) const {
  if (is_zero() || power == 0) return *this;
  std::vector<Rational> out(power);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Polynomial operator-(Polynomial p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::vector<std::string> Polynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_string(c));
  if (out.empty()) out.emplace_back("0");
  return out;
}

DivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::size_t dd = *den.degree();
  const Rational lead = den.leading();
  Polynomial rem = num;
  std::vector<Rational> quot;
  while (!rem.is_zero() && *rem.degree() >= dd) {
    const std::size_t shift = *rem.degree() - dd;
    const Rational factor = rem.leading() / lead;
    if (quot.size() <= shift) quot.resize(shift + 1);
    quot[shift] = factor;
    rem -= (den * factor).shifted(shift);
  }
  return {Polynomial(std::move(quot)), std::move(rem)};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a;
  Polynomial v = b;
  while (!v.is_zero()) {
    Polynomial r = divmod(u, v).remainder;
    u = std::move(v);
    v = std::move(r);
  }
  if (u.is_zero()) return u;
  return u * (1 / u.leading());
}

DegreeLeadConst degree_leading_constant(const Polynomial& p) {
  return {p.degree(), p.leading(), p.constant()};
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  const auto coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[i] << ")";
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

}  // namespace quasidisc

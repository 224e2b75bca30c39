#include "quasidisc/example_families.hpp"

#include <stdexcept>
#include <string>

#include "quasidisc/errors.hpp"

namespace quasidisc {

namespace {

Rational sign_of(const Integer& exponent) { return sign_power(exponent); }

}  // namespace

// ---------------------------------------------------------------------------

namespace central_binomial {

Polynomial polynomial(long n) {
  if (n < 0) throw std::out_of_range("V_n needs n >= 0");
  std::vector<Rational> coeffs;
  const auto un = static_cast<unsigned long>(n);
  for (unsigned long i = 0; i <= un; ++i) {
    coeffs.emplace_back(binomial(2 * i, i) * binomial(2 * (un - i), un - i));
  }
  return Polynomial(std::move(coeffs));
}

UlasParams ulas_params() {
  auto scale = CoefficientProvider::formula([](long n) { return ratio(2 * (2 * n - 1), n); });
  UlasParams p;
  p.shape = {0, 1, 1, 1};
  p.r0 = Polynomial(1);
  p.r1 = Polynomial{2, 2};
  p.f = PolynomialSequence({scale, scale});
  p.v = CoefficientProvider::formula([](long n) { return ratio(16 * (n - 1), n); });
  p.regime = Regime::Strict;
  return p;
}

DiffRelation diff_relation() {
  DiffRelation rel;
  rel.F = Polynomial{0, 2, -2};
  rel.G1 = [](long n) { return Polynomial::monomial(-2 * n, 1); };
  rel.G2 = [](long n) { return Polynomial::monomial(8 * n, 1); };
  rel.H1 = [](long n) { return Polynomial{2 * n + 1, 1}; };
  rel.H2 = [](long n) { return Polynomial(ratio(-(n + 1), 2)); };
  return rel;
}

Rational resultant_closed(long n) {
  if (n < 1) throw std::out_of_range("resultant needs n >= 1");
  Rational out = pow(Rational(2), 3 * n * (n - 1));
  for (long s = 1; s <= n - 1; ++s) {
    out *= pow(ratio(s, 2 * s + 1), s);
    out *= pow(ratio(2 * s + 1, s + 1), 2 * n - s - 2);
  }
  return out;
}

Rational discriminant_closed(long n, const Rational& c) {
  if (n < 2) throw std::out_of_range("closed discriminant needs n >= 2");
  const auto un = static_cast<unsigned long>(n);
  const Rational b0 = (2 * n + 1) * c + 8 * n;
  if (b0 == 0) throw DegenerateBError("(2n+1)c + 8n = 0");
  const Rational at_zero = Rational(binomial(2 * un, un)) + c * binomial(2 * un - 2, un - 1);
  if (at_zero == 0) throw HypothesisViolatedError("V_{n;c}(0) = 0 denominator");
  if (c + 4 == 0) throw HypothesisViolatedError("V_{n;c}(1) = 0 denominator");
  const Rational b1 = ratio(n, 2) * c * c + (2 * n - 1) * c;
  const Rational xi = -b1 / b0;
  const Polynomial vnc = polynomial(n) + polynomial(n - 1) * c;

  Rational out = sign_of(Integer(n) * (n - 1) / 2);
  out *= pow(Rational(2), 3 * n * n - 6 * n + 2);
  out *= pow(b0, n);
  out /= at_zero * (c + 4);
  out *= vnc(xi);
  for (long s = 1; s <= n - 1; ++s) {
    out *= pow(ratio(s, 2 * s + 1), s);
    out *= pow(ratio(2 * s + 1, s + 1), 2 * n - s - 2);
  }
  return out;
}

}  // namespace central_binomial

// ---------------------------------------------------------------------------

namespace shifted_hypergeom {

void validate(const ShiftedHypergeom& p) {
  if (is_integer(p.alpha)) throw InvalidParamsError("alpha must not be an integer");
  if (is_integer(p.gamma)) throw InvalidParamsError("gamma must not be an integer");
  if (!is_integer(p.beta) || p.beta >= 0) throw InvalidParamsError("beta must be a negative integer");
}

Polynomial polynomial(const ShiftedHypergeom& p, long n) {
  return hyp2f1_poly({p.alpha, p.beta - n, p.gamma - n});
}

UlasParams ulas_params(const ShiftedHypergeom& p) {
  validate(p);
  const long mb = -p.beta.get_num().get_si();
  UlasParams out;
  out.shape = {static_cast<std::size_t>(mb), static_cast<std::size_t>(mb + 1), 1, 1};
  out.r0 = polynomial(p, 0);
  out.r1 = polynomial(p, 1);
  out.f = PolynomialSequence(
      {CoefficientProvider::constant(1), CoefficientProvider::formula([p](long n) {
         return Rational((1 - p.alpha + p.beta - n) / (p.gamma - n));
       })});
  out.v = CoefficientProvider::formula([p](long n) {
    return Rational((1 + p.beta - n) * (1 - p.alpha + p.gamma - n) / ((p.gamma + 1 - n) * (p.gamma - n)));
  });
  out.regime = Regime::Strict;
  return out;
}

DiffRelation diff_relation(const ShiftedHypergeom& p) {
  DiffRelation rel;
  rel.F = Polynomial{0, 1, -1};
  rel.G1 = [p](long n) { return Polynomial::monomial(p.beta - n, 1); };
  rel.G2 = [p](long n) {
    return Polynomial::monomial(-(p.beta - n) * (p.gamma - p.alpha - n) / (p.gamma - n), 1);
  };
  rel.H1 = [p](long n) { return Polynomial{n - p.gamma + 1, p.alpha}; };
  rel.H2 = [p](long n) { return Polynomial(Rational(p.gamma - n - 1)); };
  return rel;
}

namespace {

Rational leading_factor(const ShiftedHypergeom& p) {
  const long one_minus_beta = 1 - p.beta.get_num().get_si();
  return sign_of(Integer(one_minus_beta)) * pochhammer(p.alpha, one_minus_beta) /
         pochhammer(p.gamma - 1, one_minus_beta);
}

Rational product_part(const ShiftedHypergeom& p, long n) {
  const long beta = p.beta.get_num().get_si();
  const auto& [alpha, _, gamma] = p;
  Rational out = 1;
  for (long s = 1; s <= n - 1; ++s) {
    out *= pow(Rational((s - beta) * (s + alpha - gamma) / (s - gamma)), s - beta);
    out *= pow(Rational(s + alpha - beta), n - s - 1);
    out /= pow(Rational(s - gamma + 1), n - 1 - beta);
  }
  return out;
}

}  // namespace

Rational resultant_closed(const ShiftedHypergeom& p, long n, const Rational& r1) {
  validate(p);
  if (n < 1) throw std::out_of_range("resultant needs n >= 1");
  return pow(leading_factor(p), n - 1) * product_part(p, n) * r1;
}

Rational discriminant_closed(const ShiftedHypergeom& p, long n, const Rational& c, const Rational& r1) {
  validate(p);
  if (n < 2) throw std::out_of_range("closed discriminant needs n >= 2");
  const long beta = p.beta.get_num().get_si();
  const auto& [alpha, _, gamma] = p;
  const Rational b0 = (n + alpha - beta) * c - (beta - n) * (gamma - alpha - n) / (gamma - n);
  if (b0 == 0) throw DegenerateBError("B_0(c) = 0");
  const Rational b1 = (n - gamma) * c * c + (n - gamma) * c;
  const Polynomial vn = polynomial(p, n);
  const Polynomial vprev = polynomial(p, n - 1);
  const Rational at_zero = 1 + c;
  const Rational at_one = vn(1) + c * vprev(1);
  if (at_zero == 0) throw HypothesisViolatedError("V_{n;c}(0) = 0 denominator");
  if (at_one == 0) throw HypothesisViolatedError("V_{n;c}(1) = 0 denominator");
  const Polynomial vnc = vn + vprev * c;

  const long dn = n - beta;
  Rational out = sign_of(Integer(dn) * (dn - 1) / 2);
  out *= pow(b0, dn);
  out *= pow(leading_factor(p), n - 1);
  out /= at_zero * at_one;
  out *= vnc(Rational(-b1 / b0));
  out *= product_part(p, n);
  return out * r1;
}

}  // namespace shifted_hypergeom

// ---------------------------------------------------------------------------

Rational MOFamily::f(long n) const {
  const Rational num = (12 * n + r + 1) * (36 * n * n + 6 * r * n + 6 * n + 3 * gamma * r - 15 * gamma);
  const Rational den = (3 * n + 3 * gamma) * (6 * n + r + 1) * (12 * n + r - 5);
  return num / den;
}

Rational MOFamily::g(long n) const {
  const Rational num = Rational((12 * n + r - 5) * (12 * n + r + 1) * (12 * n + r + 7));
  const Rational den = (3 * n + 3 * gamma) * (6 * n + r + 1) * (12 * n + r - 5);
  return -num / den;
}

Rational MOFamily::h(long n) const {
  // Forced by monicity: f_r(n) + h_r(n) = 1. For gamma_r = 4/3 the middle factor
  // is 3(2n + (-1)^{r/2+1}); for gamma_r = 3/2 the sign pattern does not hold.
  const Rational num = 3 * n * (6 * n + r + 1 - 6 * gamma) * (12 * n + r + 7);
  const Rational den = (3 * n + 3 * gamma) * (6 * n + r + 1) * (12 * n + r - 5);
  return -num / den;
}

MOFamily mo_family(int r) {
  if (r != 0 && r != 4 && r != 6 && r != 10) {
    throw InvalidParamsError("r must be one of 0, 4, 6, 10 (got " + std::to_string(r) + ")");
  }
  MOFamily fam;
  fam.r = r;
  fam.beta = ratio(r + 1, 6);
  fam.gamma = (r == 0 || r == 6) ? ratio(3, 2) : ratio(4, 3);
  return fam;
}

MOProviders mo_coefficient_providers(const MOFamily& fam) {
  return {CoefficientProvider::formula([fam](long n) { return fam.f(n); }),
          CoefficientProvider::formula([fam](long n) { return fam.g(n); }),
          CoefficientProvider::formula([fam](long n) { return fam.h(n); })};
}

Polynomial v_r_polynomial(const MOFamily& fam, long n) {
  if (n < 0) throw std::out_of_range("V_r(n; x) needs n >= 0");
  const auto un = static_cast<unsigned long>(n);
  std::vector<Rational> coeffs(un + 1);
  Rational term = 1;  // (-n)_k (n+beta)_k 2^k / ((gamma)_k k!)
  coeffs[un] = term;
  for (unsigned long k = 1; k <= un; ++k) {
    term *= (k - 1 - Rational(n)) * (n + fam.beta + (k - 1)) * 2;
    term /= (fam.gamma + (k - 1)) * k;
    coeffs[un - k] = term;
  }
  return Polynomial(std::move(coeffs));
}

UlasParams mo_ulas_params(const MOFamily& fam) {
  UlasParams p;
  p.shape = {0, 1, 1, 2};
  p.r0 = Polynomial(1);
  p.r1 = Polynomial{fam.g(0), 1};
  p.f = PolynomialSequence({CoefficientProvider::formula([fam](long n) { return fam.g(n - 1); }),
                            CoefficientProvider::formula([fam](long n) { return fam.f(n - 1); })});
  p.v = CoefficientProvider::formula([fam](long n) { return Rational(-fam.h(n - 1)); });
  p.regime = Regime::Relaxed;
  return p;
}

DiffRelation mo_diff_relation(const MOFamily& fam) {
  DiffRelation rel;
  rel.F = Polynomial{0, -2, 1};
  auto scale = [fam](long n) { return Rational(n / (2 * n + fam.beta - 1)); };
  rel.G1 = [fam, scale](long n) { return Polynomial::monomial(scale(n) * (n + fam.gamma - 1), 1); };
  rel.G2 = [fam, scale](long n) { return Polynomial::monomial(scale(n) * (n + fam.beta - fam.gamma), 2); };
  rel.H1 = [fam, scale](long n) {
    if (n < 1) throw std::domain_error("H_{1,n} needs n >= 1");
    const Rational h = fam.h(n);
    const Rational shift = n + fam.beta - fam.gamma;
    const Rational k = scale(n) / h;
    return Polynomial{-k * shift * fam.g(n), k * ((n + fam.gamma - 1) * h - shift * fam.f(n))};
  };
  rel.H2 = [fam, scale](long n) {
    if (n < 1) throw std::domain_error("H_{2,n} needs n >= 1");
    return Polynomial(Rational(scale(n) * (n + fam.beta - fam.gamma) / fam.h(n)));
  };
  return rel;
}

Rational mo_constant_telescoped(const MOFamily& fam, long j) {
  Rational out = 1;
  for (long s = 0; s < j; ++s) out *= fam.g(s);
  return out;
}

Rational mahlburg_ono_disc(const MOFamily& fam, long n) {
  if (n < 1) throw std::out_of_range("discriminant needs n >= 1");
  const Polynomial v = v_r_polynomial(fam, n);
  const Rational at_two = v(2);
  if (at_two == 0) throw HypothesisViolatedError("V_r(n; 2) = 0");
  Rational out = sign_of(Integer(n) * (n - 1) / 2);
  out *= pow(Rational(n * (n - fam.gamma + fam.beta) / (2 * n + fam.beta - 1)), n);
  out *= v.constant() / at_two;
  for (long j = 1; j <= n - 1; ++j) {
    out *= pow(fam.h(j), j);
    out *= pow(v_r_polynomial(fam, j).constant(), 2);
  }
  return out;
}

// ---------------------------------------------------------------------------

ParityReport shifted_hypergeom_parity(long beta, long n) {
  ParityReport out;
  out.direct = 0;
  for (long u = 2; u <= n; ++u) out.direct += Integer(u - 1 - beta) * (u + 2 - beta);
  const Integer b = beta;
  out.closed_form = Rational(Integer((n - 1) * (3 * b * b - 3 * b * (n + 3) + n * (n + 4)))) / 3;
  return out;
}

ParityReport mahlburg_ono_parity(long n) {
  ParityReport out;
  out.direct = Integer(n) * (n + 3) / 2;
  for (long u = 2; u <= n; ++u) out.direct += Integer(u - 1) * (u + 3);
  out.closed_form = Rational(Integer(n) * (Integer(n) * n + 6 * n - 1)) / 3;
  return out;
}

}  // namespace quasidisc

#pragma once

#include "quasidisc/families.hpp"
#include "quasidisc/formulas.hpp"
#include "quasidisc/hypergeom.hpp"
#include "quasidisc/polynomial.hpp"
#include "quasidisc/rational.hpp"

namespace quasidisc {

// ---------------------------------------------------------------------------
// V_n(x) = sum_i C(2i,i) C(2(n-i),n-i) x^i, an Ulas family with A = (0,1,1,1).

namespace central_binomial {

/// Direct binomial-sum expansion.
Polynomial polynomial(long n);

/// r_0 = 1, r_1 = 2 + 2x, f_n = (2(2n-1)/n)(x+1), v_n = 16(n-1)/n.
UlasParams ulas_params();

/// F = 2x(1-x), G_1 = -2nx, G_2 = 8nx, H_1 = x + 2n + 1, H_2 = -(n+1)/2.
DiffRelation diff_relation();

/// 2^{3n(n-1)} prod_{s=1}^{n-1} (s/(2s+1))^s ((2s+1)/(s+1))^{2n-s-2}.
Rational resultant_closed(long n);

/// Closed discriminant of V_n + c V_{n-1}, n >= 2. Throws
/// HypothesisViolatedError when V_{n;c}(0) or V_{n;c}(1) vanishes and
/// DegenerateBError when (2n+1)c + 8n = 0.
Rational discriminant_closed(long n, const Rational& c);

}  // namespace central_binomial

// ---------------------------------------------------------------------------
// V_n(x) = 2F1[alpha, beta - n; gamma - n; x] with alpha, gamma not integers
// and beta a negative integer; an Ulas family with A = (-beta, 1-beta, 1, 1).

struct ShiftedHypergeom {
  Rational alpha;
  Rational beta;
  Rational gamma;
};

namespace shifted_hypergeom {

/// Throws InvalidParamsError unless alpha, gamma are non-integers and beta is a
/// negative integer.
void validate(const ShiftedHypergeom& p);

Polynomial polynomial(const ShiftedHypergeom& p, long n);

/// Recurrence from the first contiguous relation:
/// f_n = 1 + (1-alpha+beta-n)/(gamma-n) x,
/// v_n = (1+beta-n)(1-alpha+gamma-n)/((gamma+1-n)(gamma-n)).
UlasParams ulas_params(const ShiftedHypergeom& p);

/// F = x(1-x), G_1 = (beta-n)x, G_2 = -(beta-n)(gamma-alpha-n)x/(gamma-n),
/// H_1 = alpha x + (n-gamma+1), H_2 = gamma-n-1.
DiffRelation diff_relation(const ShiftedHypergeom& p);

/// Closed product form of Res(V_n, V_{n-1}) in terms of R_1 = Res(V_1, V_0).
Rational resultant_closed(const ShiftedHypergeom& p, long n, const Rational& r1);

/// Closed discriminant of V_n + c V_{n-1} in terms of R_1.
Rational discriminant_closed(const ShiftedHypergeom& p, long n, const Rational& c, const Rational& r1);

}  // namespace shifted_hypergeom

// ---------------------------------------------------------------------------
// V_r(n; x) = x^n 2F1[-n, n + beta_r; gamma_r; 2/x], r in {0, 4, 6, 10}.

struct MOFamily {
  int r = 0;
  Rational beta;   ///< (r+1)/6
  Rational gamma;  ///< 3/2 for r in {0,6}, 4/3 for r in {4,10}

  [[nodiscard]] Rational f(long n) const;
  [[nodiscard]] Rational g(long n) const;
  /// Throws std::domain_error when the value is needed as a divisor at n = 0.
  [[nodiscard]] Rational h(long n) const;
};

/// Throws InvalidParamsError for r outside {0, 4, 6, 10}.
MOFamily mo_family(int r);

struct MOProviders {
  CoefficientProvider f;
  CoefficientProvider g;
  CoefficientProvider h;
};

MOProviders mo_coefficient_providers(const MOFamily& fam);

/// Monic degree-n polynomial built from the reversed series, coefficients c_r(m, n).
Polynomial v_r_polynomial(const MOFamily& fam, long n);

/// A = (0, 1, 1, 2) in the relaxed regime: f_n = f_r(n-1)x + g_r(n-1),
/// v_n = -h_r(n-1), r_0 = 1, r_1 = x + g_r(0).
UlasParams mo_ulas_params(const MOFamily& fam);

/// F = (x-2)x with the G/H polynomials derived from the differential equation
/// and the three-term recurrence. H_{1,n}, H_{2,n} need n >= 1.
DiffRelation mo_diff_relation(const MOFamily& fam);

/// prod_{s=0}^{j-1} g_r(s), the telescoped constant term of V_r(j; x).
Rational mo_constant_telescoped(const MOFamily& fam, long j);

/// (-1)^{n(n-1)/2} (n(n-gamma+beta)/(2n+beta-1))^n c_r(n,0)/V_r(n;2)
///   * prod_{j=1}^{n-1} h_r(j)^j c_r(j,0)^2,
/// n >= 1; throws HypothesisViolatedError when V_r(n; 2) = 0.
Rational mahlburg_ono_disc(const MOFamily& fam, long n);

// ---------------------------------------------------------------------------

struct ParityReport {
  Integer direct;       ///< exponent summed term by term
  Rational closed_form; ///< the closed polynomial expression in n (and beta)
  [[nodiscard]] bool consistent() const { return Rational(direct) == closed_form; }
  [[nodiscard]] bool even() const { return mpz_even_p(direct.get_mpz_t()) != 0; }
};

/// sum_{u=2}^n (u-1-beta)(u+2-beta) against (n-1)(3beta^2 - 3beta(n+3) + n(n+4))/3.
ParityReport shifted_hypergeom_parity(long beta, long n);

/// n(n+3)/2 + sum_{u=2}^n (u-1)(u+3) against n(n^2+6n-1)/3.
ParityReport mahlburg_ono_parity(long n);

}  // namespace quasidisc

#pragma once

#include <functional>
#include <optional>

#include "quasidisc/families.hpp"
#include "quasidisc/polynomial.hpp"
#include "quasidisc/rational.hpp"

namespace quasidisc {

using PolynomialProvider = std::function<Polynomial(long)>;

/// Polynomials with
///   F r'_n = G_{1,n} r_n + G_{2,n} r_{n-1} = H_{1,n} r_n + H_{2,n} r_{n+1}.
struct DiffRelation {
  Polynomial F;
  PolynomialProvider G1;
  PolynomialProvider G2;
  PolynomialProvider H1;
  PolynomialProvider H2;
};

struct DiffRelationCheck {
  bool lower_holds = false;  ///< F r'_n = G1 r_n + G2 r_{n-1}
  bool upper_holds = false;  ///< F r'_n = H1 r_n + H2 r_{n+1}
  [[nodiscard]] bool holds() const { return lower_holds && upper_holds; }
};

/// Tests both identities at index n (n >= 1) as exact polynomial equalities.
DiffRelationCheck check_diff_relation(Sequence& family, const DiffRelation& relation, long n);

/// Q_{n,c}(x) = -H_{2,n-1} c^2 + (H_{1,n-1} - G_{1,n}) c + G_{2,n}. The H terms
/// are only evaluated when c != 0.
struct BPolynomial {
  Polynomial Q;
  std::size_t e = 0;       ///< deg Q
  std::size_t generic_e = 0;  ///< degree for generic c
  Rational B0;             ///< lc(Q)
};

BPolynomial b_polynomial(const DiffRelation& relation, long n, const Rational& c);

/// (-1)^{n(n-1)/2} prod_{i=1}^{n-1} a_i^{2(n-i)} c_{i+1}^i.
Rational schur_resultant(const SchurParams& params, long n);

enum class UlasLine {
  First,   ///< consumes generated L_u, C_u and degrees
  Second,  ///< explicit in the recurrence data
};

/// Res(r_n, r_{n-1}) for n >= 2 from the closed form; R_1 comes from the
/// Sylvester oracle. For n = 1 returns the oracle value of R_1.
Rational ulas_resultant(UlasFamily& family, long n, UlasLine line);

/// sum_{u=2}^n e_A(u), e_A(u) = ((u-2)k + j)((u-1)k + j + 1 + l).
Integer ulas_sign_exponent(const UlasShape& shape, long n);

/// Res(r_n, r_{n-1}) for n >= d+1 from the closed form with predicted L, C;
/// R_d comes from the oracle. For n = d returns the oracle value.
Rational turaj_resultant(TurajFamily& family, long n);

/// gamma_A(n) from the two-case display, n >= d+1.
Integer turaj_gamma(const TurajParams& params, long n);

/// disc(r_n + c r_{n-1}) through the differential relation:
///   (-1)^{d_n(d_n+2e-1)/2} L_n^{d_n - d_{n-1} - 2 - e} R_n Res(Q, r_{n;c}) L_n^{deg F} / Res(r_{n;c}, F)
/// where Res(Q, r_{n;c}) = B_0^{d_n} prod r_{n;c}(xi) and L^{deg F}/Res(r_{n;c}, F)
/// = prod 1/F(y_t). R_n comes from the matching resultant closed form.
/// Throws HypothesisViolatedError if F vanishes at a root of r_{n;c} or the
/// degree of r_{n;c} differs from deg r_n, DegenerateBError if deg Q drops.
Rational quasi_discriminant(UlasFamily& family, const DiffRelation& relation, long n, const Rational& c);
Rational quasi_discriminant(TurajFamily& family, const DiffRelation& relation, long n, const Rational& c);

/// Assembles the discriminant from a known R_n; shared by both overloads.
Rational quasi_discriminant_from(Sequence& family, const DiffRelation& relation, long n,
                                 const Rational& c, const Rational& resultant_n);

}  // namespace quasidisc

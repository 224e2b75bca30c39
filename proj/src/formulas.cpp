#include "quasidisc/formulas.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "quasidisc/errors.hpp"
#include "quasidisc/resultant.hpp"

namespace quasidisc {

namespace {

Integer to_integer(std::size_t value) { return Integer(static_cast<unsigned long>(value)); }

Integer ipow(const Integer& base, long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

std::size_t degree_or_zero(const Polynomial& p) { return p.degree().value_or(0); }

}  // namespace

DiffRelationCheck check_diff_relation(Sequence& family, const DiffRelation& relation, long n) {
  if (n < 1) throw std::out_of_range("differential relation needs n >= 1");
  const Polynomial rn = family.at(n);
  const Polynomial lhs = relation.F * rn.derivative();
  DiffRelationCheck out;
  out.lower_holds = lhs == relation.G1(n) * rn + relation.G2(n) * family.at(n - 1);
  out.upper_holds = lhs == relation.H1(n) * rn + relation.H2(n) * family.at(n + 1);
  return out;
}

BPolynomial b_polynomial(const DiffRelation& relation, long n, const Rational& c) {
  const Polynomial g1 = relation.G1(n);
  const Polynomial g2 = relation.G2(n);
  BPolynomial out;
  if (c == 0) {
    out.Q = g2;
    out.generic_e = degree_or_zero(g2);
  } else {
    const Polynomial h1 = relation.H1(n - 1);
    const Polynomial h2 = relation.H2(n - 1);
    const Polynomial linear = h1 - g1;
    out.Q = h2 * Rational(-c * c) + linear * c + g2;
    out.generic_e = std::max({degree_or_zero(h2), degree_or_zero(linear), degree_or_zero(g2)});
  }
  out.e = degree_or_zero(out.Q);
  out.B0 = out.Q.leading();
  return out;
}

// ---------------------------------------------------------------------------

Rational schur_resultant(const SchurParams& params, long n) {
  if (n < 1) throw std::out_of_range("Schur resultant needs n >= 1");
  for (long u = 1; u <= n; ++u) {
    if (params.a(u) == 0) throw InvalidParamsError("Schur: a_" + std::to_string(u) + " = 0");
    if (u >= 2 && params.c(u) == 0) throw InvalidParamsError("Schur: c_" + std::to_string(u) + " = 0");
  }
  Rational out = sign_power(Integer(n) * (n - 1) / 2);
  for (long i = 1; i <= n - 1; ++i) {
    out *= pow(params.a(i), 2 * (n - i));
    out *= pow(params.c(i + 1), i);
  }
  return out;
}

Integer ulas_sign_exponent(const UlasShape& shape, long n) {
  const Integer k = to_integer(shape.k);
  const Integer j = to_integer(shape.j);
  const Integer l = to_integer(shape.l);
  Integer sum = 0;
  for (long u = 2; u <= n; ++u) sum += ((u - 2) * k + j) * ((u - 1) * k + j + 1 + l);
  return sum;
}

Rational ulas_resultant(UlasFamily& family, long n, UlasLine line) {
  if (n < 1) throw std::out_of_range("Ulas resultant needs n >= 1");
  const auto& p = family.params();
  const Rational r1 = resultant(p.r1, p.r0);
  if (n == 1) return r1;
  const auto& [i, j, k, l] = p.shape;
  const long sl = static_cast<long>(l);
  Rational out = sign_power(ulas_sign_exponent(p.shape, n));

  if (line == UlasLine::First) {
    for (long u = 2; u <= n; ++u) {
      const Polynomial& prev = family.at(u - 1);
      const long deg_u = static_cast<long>(family.at(u).checked_degree());
      const long deg_prev2 = static_cast<long>(family.at(u - 2).checked_degree());
      const long gamma = deg_u - sl - deg_prev2;
      out *= pow(p.v(u), static_cast<long>(prev.checked_degree()));
      out *= pow(prev.leading(), gamma);
      out *= pow(prev.constant(), sl);
    }
    return out * r1;
  }

  const Rational pi = p.r0.leading();
  const Rational qj = p.r1.leading();
  const Rational q0 = p.r1.constant();
  auto a = [&](long u, std::size_t s) { return p.f.coefficient(s)(u); };
  Rational t_a = qj;
  if (i + l == j + k) {
    const Rational a2k = a(2, k);
    if (a2k == 0) throw ConditionViolatedError("Ulas: T_A needs a_{2,k} != 0");
    t_a = (a2k * qj - p.v(2) * pi) / a2k;
  }
  const long two_k_l = 2 * static_cast<long>(k) - sl;
  out *= pow(t_a, two_k_l * (n - 2));
  out *= pow(q0, sl * (n - 1));
  out *= pow(qj, static_cast<long>(k + j) - sl - static_cast<long>(i));
  for (long u = 0; u <= n - 2; ++u) {
    out *= pow(p.v(u + 2), u * static_cast<long>(k) + static_cast<long>(j));
  }
  for (long s = 1; s <= n - 1; ++s) {
    out *= pow(a(s + 1, 0), sl * (n - s - 1));
    out *= pow(a(s + 1, k), two_k_l * (n - s - 1));
  }
  return out * r1;
}

// ---------------------------------------------------------------------------

Integer turaj_gamma(const TurajParams& params, long n) {
  const long d = static_cast<long>(params.d);
  if (n < d + 1) throw std::out_of_range("gamma_A needs n >= d+1");
  const Integer k = to_integer(params.k);
  const Integer l = to_integer(params.l);
  const Integer m = params.m;
  const Integer id = to_integer(params.initial[params.d].checked_degree());
  const Integer id1 = to_integer(params.initial[params.d - 1].checked_degree());
  if (n == d + 1) return k - l + m * (id - id1);
  return ipow(m, n - d - 1) * (k + id * (m - 1)) + k - l;
}

Rational turaj_resultant(TurajFamily& family, long n) {
  const auto& p = family.params();
  const long d = static_cast<long>(p.d);
  if (n < d) throw std::out_of_range("Turaj resultant needs n >= d");
  const Rational rd = resultant(family.at(d), family.at(d - 1));
  if (n == d) return rd;
  const Integer m = p.m;
  const Integer l = to_integer(p.l);
  Integer sign_sum = 0;
  Rational out = 1;
  for (long s = d + 1; s <= n; ++s) {
    const Integer weight = ipow(m, n - s);
    const Integer deg_s = predicted_degree_turaj(p, s);
    const Integer deg_prev = predicted_degree_turaj(p, s - 1);
    sign_sum += weight * (deg_s + l) * deg_prev;
    const LeadConst lc = predicted_lead_const_turaj(p, s - 1);
    Rational factor = pow(lc.leading, turaj_gamma(p, s)) * pow(p.v(s), deg_prev);
    if (p.l != 0) factor *= pow(lc.constant, l);
    out *= pow(factor, weight);
  }
  out *= pow(rd, ipow(m, n - d));
  return sign_power(sign_sum) * out;
}

// ---------------------------------------------------------------------------

Rational quasi_discriminant_from(Sequence& family, const DiffRelation& relation, long n,
                                 const Rational& c, const Rational& resultant_n) {
  const Polynomial f = gen_quasi(family, n, c);
  const Degree deg_n = family.at(n).degree();
  if (f.degree() != deg_n || !deg_n || *deg_n == 0) {
    throw HypothesisViolatedError("r_{n;c} does not keep the degree of r_n");
  }
  const long dn = static_cast<long>(*deg_n);
  const long dprev = static_cast<long>(family.at(n - 1).checked_degree());
  const Rational lead = f.leading();

  const Rational res_f = resultant(f, relation.F);
  if (res_f == 0) throw HypothesisViolatedError("F vanishes at a root of r_{n;c}");

  const BPolynomial bp = b_polynomial(relation, n, c);
  if (bp.Q.is_zero() || bp.e < bp.generic_e) {
    throw DegenerateBError("B_0(c) = 0: the B-polynomial drops below degree " +
                           std::to_string(bp.generic_e));
  }
  const long e = static_cast<long>(bp.e);
  const Rational res_q = resultant(bp.Q, f);

  const Integer sign_exp = Integer(dn) * (dn + 2 * e - 1) / 2;
  const long lead_exp = dn - dprev - 2 - e + static_cast<long>(relation.F.checked_degree());
  return Rational(sign_power(sign_exp) * pow(lead, lead_exp) * resultant_n * res_q / res_f);
}

Rational quasi_discriminant(UlasFamily& family, const DiffRelation& relation, long n, const Rational& c) {
  if (n < 1) throw std::out_of_range("quasi discriminant needs n >= 1");
  return quasi_discriminant_from(family, relation, n, c, ulas_resultant(family, n, UlasLine::Second));
}

Rational quasi_discriminant(TurajFamily& family, const DiffRelation& relation, long n, const Rational& c) {
  if (n < static_cast<long>(family.params().d) + 1) {
    throw std::out_of_range("quasi discriminant needs n >= d+1");
  }
  return quasi_discriminant_from(family, relation, n, c, turaj_resultant(family, n));
}

}  // namespace quasidisc

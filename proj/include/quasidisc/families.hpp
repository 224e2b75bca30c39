#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <vector>

#include "quasidisc/polynomial.hpp"
#include "quasidisc/rational.hpp"

namespace quasidisc {

/// An index-to-scalar sequence: a_n, v_n, f_r(n) and so on. Either an explicit
/// table starting at some first index, or an exact formula in n. Evaluation
/// is deterministic; asking a table for an index it does not cover throws
/// InvalidParamsError.
class CoefficientProvider {
 public:
  using Formula = std::function<Rational(long)>;

  CoefficientProvider() : CoefficientProvider(constant(0)) {}

  static CoefficientProvider constant(const Rational& value);
  static CoefficientProvider table(std::vector<Rational> values, long first_index);
  static CoefficientProvider formula(Formula fn);

  Rational operator()(long n) const { return fn_(n); }

 private:
  explicit CoefficientProvider(Formula fn) : fn_(std::move(fn)) {}
  Formula fn_;
};

/// n -> sum_s coefficients[s](n) x^s.
class PolynomialSequence {
 public:
  PolynomialSequence() = default;
  explicit PolynomialSequence(std::vector<CoefficientProvider> coefficients)
      : coeffs_(std::move(coefficients)) {}

  [[nodiscard]] Polynomial operator()(long n) const;
  /// Number of coefficient slots minus one (the nominal degree).
  [[nodiscard]] std::size_t nominal_degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  [[nodiscard]] const CoefficientProvider& coefficient(std::size_t s) const { return coeffs_.at(s); }
  [[nodiscard]] bool empty() const { return coeffs_.empty(); }

 private:
  std::vector<CoefficientProvider> coeffs_;
};

/// Anything that produces the n-th member of a polynomial sequence.
/// Implementations memoize, so an instance must stay on one thread.
class Sequence {
 public:
  virtual ~Sequence() = default;
  virtual const Polynomial& at(long n) = 0;
};

// ---------------------------------------------------------------------------
// Schur: r_0 = 1, r_1 = a_1 x + b_1, r_n = (a_n x + b_n) r_{n-1} - c_n r_{n-2}.

struct SchurParams {
  CoefficientProvider a;
  CoefficientProvider b;
  CoefficientProvider c;
};

class SchurFamily final : public Sequence {
 public:
  explicit SchurFamily(SchurParams params) : params_(std::move(params)) {}
  const Polynomial& at(long n) override;
  [[nodiscard]] const SchurParams& params() const { return params_; }

 private:
  SchurParams params_;
  std::deque<Polynomial> cache_;
};

Polynomial gen_schur(const SchurParams& params, long n);

// ---------------------------------------------------------------------------
// Ulas: r_n = f_n r_{n-1} - v_n x^l r_{n-2} for n >= 2, A = (i, j, k, l).

enum class Regime {
  Strict,   ///< i <= j and k >= l
  Relaxed,  ///< i <= j, i + l <= j + k, l <= 2k; needs L_n != 0 at runtime
};

struct UlasShape {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t l = 0;
};

struct UlasParams {
  UlasShape shape;
  Polynomial r0;            ///< degree i, coefficients p_s
  Polynomial r1;            ///< degree j, coefficients q_s
  PolynomialSequence f;     ///< f_n = sum_{s<=k} a_{n,s} x^s
  CoefficientProvider v;    ///< v_n
  Regime regime = Regime::Strict;
};

/// Checks the static assumptions: shape constraints for the regime, deg r0 = i,
/// deg r1 = j, f has k+1 coefficient slots, a_{2,k} != 0 and
/// a_{2,k} q_j - v_2 p_i != 0. Throws InvalidParamsError.
void validate(const UlasParams& params);

class UlasFamily final : public Sequence {
 public:
  explicit UlasFamily(UlasParams params);
  /// r_{A,n}. Throws InvalidParamsError if a_{n,k} = 0 and DegreeDroppedError
  /// if deg r_{A,n} != (n-1)k + j for n >= 2.
  const Polynomial& at(long n) override;
  [[nodiscard]] const UlasParams& params() const { return params_; }
  /// (n-1)k + j for n >= 1, i for n = 0.
  [[nodiscard]] std::size_t predicted_degree(long n) const;

 private:
  UlasParams params_;
  std::deque<Polynomial> cache_;
};

Polynomial gen_ulas(const UlasParams& params, long n);

// ---------------------------------------------------------------------------
// Turaj: for n >= d+1
//   r_n = g_n r_{n-1}^m + sum_alpha t_{alpha,n} r^alpha_n r_{n-1} + v_n x^l r_{n-2}^m,
// with r^alpha_n = r_{n-1}^{alpha_0} ... r_{n-d-1}^{alpha_d} and |alpha| < m.

struct MiddleTerm {
  std::vector<unsigned> alpha;  ///< d+1 exponents
  PolynomialSequence t;         ///< t_{alpha,n}; t(0) = 0 and deg t < k
};

struct TurajParams {
  std::size_t d = 1;
  unsigned m = 1;
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<Polynomial> initial;  ///< r_0 .. r_d, degrees i_0 <= ... <= i_d
  PolynomialSequence g;             ///< g_n = sum_{s<=k} a_{s,n} x^s
  CoefficientProvider v;
  std::vector<MiddleTerm> middle;
};

/// Static checks; throws InvalidParamsError.
void validate(const TurajParams& params);

class TurajFamily final : public Sequence {
 public:
  explicit TurajFamily(TurajParams params);
  const Polynomial& at(long n) override;
  [[nodiscard]] const TurajParams& params() const { return params_; }

 private:
  TurajParams params_;
  std::deque<Polynomial> cache_;
};

Polynomial gen_turaj(const TurajParams& params, long n);

/// k * sum_{s=0}^{n-d-1} m^s + i_d m^{n-d} for n >= d; deg r_n for n < d.
Integer predicted_degree_turaj(const TurajParams& params, long n);

struct LeadConst {
  Rational leading;
  Rational constant;
};

/// L_n and C_n from the closed case expressions, n >= d. C_n is reported as 1
/// when l = 0 (its exponent in the resultant is zero).
LeadConst predicted_lead_const_turaj(const TurajParams& params, long n);

// ---------------------------------------------------------------------------

/// r_n + c r_{n-1}, n >= 1.
Polynomial gen_quasi(Sequence& family, long n, const Rational& c);

}  // namespace quasidisc

#pragma once

#include <cstddef>
#include <optional>

#include "quasidisc/polynomial.hpp"
#include "quasidisc/rational.hpp"

namespace quasidisc {

/// Rising factorial alpha (alpha+1) ... (alpha+k-1); 1 for k = 0.
Rational pochhammer(const Rational& alpha, unsigned long k);

/// 2F1[a, b; c; x] with at least one upper parameter a nonpositive integer.
struct HypergeomSpec {
  Rational a;
  Rational b;
  Rational c;
};

/// Index N of the last nonzero term: min(-a, -b) over the nonpositive-integer
/// upper parameters, or nullopt if the series does not terminate.
std::optional<unsigned long> termination_length(const HypergeomSpec& spec);

/// sum_{k=0}^N (a)_k (b)_k / ((c)_k k!) x^k. Throws std::invalid_argument when
/// the series does not terminate and LowerPoleError when (c)_k = 0 for some
/// k <= N.
Polynomial hyp2f1_poly(const HypergeomSpec& spec);

/// Verdict of a polynomial identity lhs = rhs.
struct IdentityCheck {
  Polynomial lhs;
  Polynomial rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
  [[nodiscard]] Polynomial residual() const { return lhs - rhs; }
};

/// F[a,b;c]' = (ab/c) F[a+1,b+1;c+1], for a terminating in a.
IdentityCheck check_derivative_identity(const HypergeomSpec& spec);

/// The four contiguous relations:
///  1: F = (c + (1-a+b)x)/c F[a,b+1;c+1] - (1+b)(1-a+c)x/((c+1)c) F[a,b+2;c+2]
///  2: x(1-x) F' = (c-1) F[a,b-1;c-1] + (ax + 1 - c) F
///  3: x(1-x) F' = bx F - b(c-a)/c x F[a,b+1;c+1]
///  4: x(x-1) F' = -a/(b-1-a) ((b-c) F[a+1,b-1;c] + ((b-1-a)x - (b-c)) F)
/// Relations 1-3 need a nonpositive integer; relation 4 needs b nonpositive
/// integer. Throws std::invalid_argument when termination is not guaranteed.
IdentityCheck check_contiguous_relation(int which, const HypergeomSpec& spec);

}  // namespace quasidisc

#include "quasidisc/hypergeom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "quasidisc/errors.hpp"

namespace quasidisc {

Rational pochhammer(const Rational& alpha, unsigned long k) {
  Rational out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= alpha + i;
  return out;
}

std::optional<unsigned long> termination_length(const HypergeomSpec& spec) {
  std::optional<unsigned long> n;
  for (const Rational* upper : {&spec.a, &spec.b}) {
    if (!is_nonpositive_integer(*upper)) continue;
    const unsigned long len = Integer(-upper->get_num()).get_ui();
    n = n ? std::min(*n, len) : len;
  }
  return n;
}

Polynomial hyp2f1_poly(const HypergeomSpec& spec) {
  const auto length = termination_length(spec);
  if (!length) throw std::invalid_argument("2F1 series does not terminate");
  std::vector<Rational> coeffs(*length + 1);
  Rational term = 1;
  coeffs[0] = 1;
  for (unsigned long k = 1; k <= *length; ++k) {
    const Rational lower = spec.c + (k - 1);
    if (lower == 0) {
      throw LowerPoleError("2F1 lower parameter " + to_string(spec.c) + " hits a pole at k = " +
                           std::to_string(k));
    }
    term *= (spec.a + (k - 1)) * (spec.b + (k - 1));
    term /= lower * k;
    coeffs[k] = term;
  }
  return Polynomial(std::move(coeffs));
}

namespace {

Polynomial F(const Rational& a, const Rational& b, const Rational& c) { return hyp2f1_poly({a, b, c}); }

const Polynomial kX = Polynomial::x();
const Polynomial kXOneMinusX{0, 1, -1};

void require_terminating(const Rational& p, const char* name) {
  if (!is_nonpositive_integer(p)) {
    throw std::invalid_argument(std::string("relation needs ") + name + " to be a nonpositive integer");
  }
}

}  // namespace

IdentityCheck check_derivative_identity(const HypergeomSpec& spec) {
  require_terminating(spec.a, "a");
  const auto& [a, b, c] = spec;
  // F[1, b+1; c+1] does not terminate, but it is multiplied by ab/c = 0
  if (a == 0) return {F(a, b, c).derivative(), Polynomial()};
  return {F(a, b, c).derivative(), F(a + 1, b + 1, c + 1) * Rational(a * b / c)};
}

IdentityCheck check_contiguous_relation(int which, const HypergeomSpec& spec) {
  const auto& [a, b, c] = spec;
  switch (which) {
    case 1: {
      require_terminating(a, "a");
      const Polynomial first = Polynomial{c, 1 - a + b} * Rational(1 / c) * F(a, b + 1, c + 1);
      const Polynomial second = kX * Rational((1 + b) * (1 - a + c) / ((c + 1) * c)) * F(a, b + 2, c + 2);
      return {F(a, b, c), first - second};
    }
    case 2: {
      require_terminating(a, "a");
      const Polynomial base = F(a, b, c);
      return {kXOneMinusX * base.derivative(),
              F(a, b - 1, c - 1) * Rational(c - 1) + Polynomial{1 - c, a} * base};
    }
    case 3: {
      require_terminating(a, "a");
      const Polynomial base = F(a, b, c);
      return {kXOneMinusX * base.derivative(),
              kX * b * base - kX * Rational(b * (c - a) / c) * F(a, b + 1, c + 1)};
    }
    case 4: {
      require_terminating(b, "b");
      if (b - 1 - a == 0) throw std::invalid_argument("relation 4 needs b - 1 - a != 0");
      const Polynomial base = F(a, b, c);
      const Polynomial inner = F(a + 1, b - 1, c) * Rational(b - c) + Polynomial{c - b, b - 1 - a} * base;
      return {-kXOneMinusX * base.derivative(), inner * Rational(-a / (b - 1 - a))};
    }
    default:
      throw std::invalid_argument("contiguous relation index must be 1..4");
  }
}

}  // namespace quasidisc

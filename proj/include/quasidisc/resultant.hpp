#pragma once

#include <cstddef>
#include <vector>

#include "quasidisc/polynomial.hpp"
#include "quasidisc/rational.hpp"

namespace quasidisc {

/// Row-major square matrix of rationals.
class Matrix {
 public:
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  Rational& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

 private:
  std::size_t dim_;
  std::vector<Rational> data_;
};

/// Sylvester matrix of f (deg m) and g (deg n): n rows of shifted f
/// coefficients followed by m rows of shifted g coefficients, highest power
/// first. Both inputs must be nonzero.
Matrix sylvester_matrix(const Polynomial& f, const Polynomial& g);

/// Exact determinant. Each row is scaled to integers, eliminated with the
/// fraction-free Bareiss scheme, and the scale is divided back out.
Rational determinant_fraction_free(const Matrix& m);

/// Res(f, g) = lc(f)^{deg g} * prod g(alpha) over the roots alpha of f
/// = (-1)^{deg f deg g} lc(g)^{deg f} * prod f(beta) over the roots beta of g,
/// which is the determinant of sylvester_matrix(f, g).
/// Constants: Res(a, g) = a^{deg g}, Res(f, b) = b^{deg f}. Res(0, g) = 0 for
/// nonzero g; throws BothZeroError for Res(0, 0).
Rational resultant(const Polynomial& f, const Polynomial& g);

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), n = deg f >= 1.
/// Throws DegreeTooLowError for constants and zero.
Rational discriminant(const Polynomial& f);

/// prod g(y) over the roots y of f, with multiplicity, evaluated as
/// Res(f, g) / lc(f)^{deg g} without computing any root. Requires deg f >= 1;
/// for g = 0 the product is 0.
Rational product_over_roots(const Polynomial& f, const Polynomial& g);

}  // namespace quasidisc

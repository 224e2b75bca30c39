#include "quasidisc/resultant.hpp"

#include <stdexcept>
#include <utility>

#include "quasidisc/errors.hpp"

namespace quasidisc {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : dim_(rows.size()), data_() {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw std::invalid_argument("matrix is not square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix sylvester_matrix(const Polynomial& f, const Polynomial& g) {
  const std::size_t m = f.checked_degree();
  const std::size_t n = g.checked_degree();
  Matrix s(m + n);
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t i = 0; i <= m; ++i) s(row, row + i) = f[m - i];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t i = 0; i <= n; ++i) s(n + row, row + i) = g[n - i];
  }
  return s;
}

Rational determinant_fraction_free(const Matrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;

  // Clear denominators row by row; det(M) = det(A) / prod(scale).
  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    scale *= row_lcm;
    for (std::size_t c = 0; c < n; ++c) {
      a[r * n + c] = m(r, c).get_num() * (row_lcm / m(r, c).get_den());
    }
  }

  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  int sign = 1;
  Integer prev = 1;
  Integer tmp;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // a_ij = (a_kk a_ij - a_ik a_kj) / prev, exact by Sylvester's identity.
        mpz_mul(tmp.get_mpz_t(), at(k, k).get_mpz_t(), at(i, j).get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  Rational det(at(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw BothZeroError();
  if (f.is_zero() || g.is_zero()) return 0;
  const std::size_t m = *f.degree();
  const std::size_t n = *g.degree();
  if (m == 0) return pow(f.leading(), static_cast<long>(n));
  if (n == 0) return pow(g.leading(), static_cast<long>(m));
  return determinant_fraction_free(sylvester_matrix(f, g));
}

Rational discriminant(const Polynomial& f) {
  const Degree deg = f.degree();
  if (!deg || *deg == 0) throw DegreeTooLowError("discriminant needs degree >= 1");
  const std::size_t n = *deg;
  const int sign = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  return Rational(sign * resultant(f, f.derivative()) / f.leading());
}

Rational product_over_roots(const Polynomial& f, const Polynomial& g) {
  const Degree deg_f = f.degree();
  if (!deg_f || *deg_f == 0) throw DegreeTooLowError("product over roots needs deg f >= 1");
  if (g.is_zero()) return 0;
  return resultant(f, g) / pow(f.leading(), static_cast<long>(*g.degree()));
}

}  // namespace quasidisc

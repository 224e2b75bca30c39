#include <doctest.h>

#include <random>

#include "quasidisc/errors.hpp"
#include "quasidisc/resultant.hpp"
#include "test_support.hpp"

using namespace quasidisc;

TEST_CASE("determinant_fraction_free examples") {
  Matrix id(4);
  for (std::size_t i = 0; i < 4; ++i) id(i, i) = 1;
  CHECK(determinant_fraction_free(id) == 1);
  CHECK(determinant_fraction_free(Matrix{{1, 0, 1}, {1, -1, 0}, {0, 1, -1}}) == 2);
  CHECK(determinant_fraction_free(Matrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == 0);
  // zero pivot forces a row swap
  CHECK(determinant_fraction_free(Matrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant_fraction_free(Matrix{{ratio(1, 2), ratio(1, 3)}, {ratio(1, 4), ratio(1, 5)}}) ==
        ratio(1, 60));
}

TEST_CASE("determinant agrees with permutation expansion") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    Matrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = testing::random_rational(rng, -3, 3, trial % 2 ? 4 : 1);
    CHECK(determinant_fraction_free(m) == testing::leibniz_determinant(m));
  }
}

TEST_CASE("resultant examples") {
  CHECK(resultant(Polynomial{-1, 0, 1}, Polynomial{-1, 1}) == 0);
  CHECK(resultant(Polynomial{-1, 0, 1}, Polynomial::x()) == -1);
  CHECK(resultant(Polynomial{1, 2, 0, 7}, Polynomial(5)) == 125);
  CHECK(resultant(Polynomial(5), Polynomial{1, 2, 0, 7}) == 125);
  CHECK(resultant(Polynomial{6, 4, 6}, Polynomial{2, 2}) == 32);
  CHECK(resultant(Polynomial(3), Polynomial(4)) == 1);
  CHECK(resultant(Polynomial(), Polynomial{1, 1}) == 0);
  CHECK_THROWS_AS(resultant(Polynomial(), Polynomial()), BothZeroError);
}

TEST_CASE("resultant matches the root-product definition") {
  // f = 2(x-1)(x+2)(x-3), g = 3(x+1)(x-1/2): Res = lc(f)^2 prod g(roots of f).
  const Polynomial f = Polynomial{-1, 1} * Polynomial{2, 1} * Polynomial{-3, 2 * 1} * Rational(1);
  const Polynomial g = Polynomial{1, 1} * Polynomial{ratio(-1, 2), 1} * Rational(3);
  const Rational lc = f.leading();
  Rational expected = lc * lc;
  for (const Rational& root : {Rational(1), Rational(-2), ratio(3, 2)}) expected *= g(root);
  CHECK(resultant(f, g) == expected);
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(Polynomial{1, 1, 1}) == -3);
  CHECK(discriminant(Polynomial{5, 1}) == 1);
  CHECK(discriminant(Polynomial{6, 4, 6}) == -128);
  CHECK_THROWS_AS(discriminant(Polynomial(4)), DegreeTooLowError);
  CHECK_THROWS_AS(discriminant(Polynomial()), DegreeTooLowError);
  // cubic x^3 + px + q: -4p^3 - 27q^2
  CHECK(discriminant(Polynomial{2, -3, 0, 1}) == -4 * -27 - 27 * 4);
}

TEST_CASE("product_over_roots") {
  CHECK(product_over_roots(Polynomial{-1, 0, 1}, Polynomial::x()) == -1);
  CHECK(product_over_roots(Polynomial{3, 1, 4, 1}, Polynomial(1)) == 1);
  // V_2 = 6 + 4x + 6x^2, g = 2x(1-x): prod g(y) = 2^2 prod y prod (1-y) = 4 (6/6)(16/6)
  CHECK(product_over_roots(Polynomial{6, 4, 6}, Polynomial{0, 2, -2}) == ratio(4 * 16, 6));
  CHECK_THROWS_AS(product_over_roots(Polynomial(2), Polynomial::x()), DegreeTooLowError);
}

TEST_CASE("resultant properties on random polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const auto f = testing::random_polynomial(rng, 1 + rng() % 5, 4, 2);
    const auto g = testing::random_polynomial(rng, rng() % 5, 4, 2);
    const auto h = testing::random_polynomial(rng, rng() % 4, 4, 2);
    const auto df = *f.degree();
    const auto dg = *g.degree();
    const Rational swap_sign = (df * dg) % 2 == 0 ? 1 : -1;
    CHECK(resultant(f, g) == swap_sign * resultant(g, f));
    CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    const bool coprime = gcd(f, g).degree() == Degree(0);
    CHECK((resultant(f, g) != 0) == coprime);
    CHECK((discriminant(f) == 0) == (gcd(f, f.derivative()).degree() != Degree(0)));
  }
}

TEST_CASE("shared factors force a zero resultant") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto common = testing::random_polynomial(rng, 1 + rng() % 2);
    const auto f = common * testing::random_polynomial(rng, rng() % 3);
    const auto g = common * testing::random_polynomial(rng, rng() % 3);
    CHECK(resultant(f, g) == 0);
    CHECK(discriminant(common * common * testing::random_polynomial(rng, rng() % 2)) == 0);
  }
}

TEST_CASE("root products with known rational roots") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t count = 1 + rng() % 4;
    Polynomial f(testing::random_rational(rng, 1, 4));
    std::vector<Rational> roots;
    for (std::size_t i = 0; i < count; ++i) {
      roots.push_back(testing::random_rational(rng, -5, 5, 3));
      f *= Polynomial{-roots.back(), 1};
    }
    const auto g = testing::random_polynomial(rng, rng() % 4, 4, 2);
    Rational direct = 1;
    for (const auto& r : roots) direct *= g(r);
    CHECK(product_over_roots(f, g) == direct);
  }
}

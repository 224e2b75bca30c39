#include <doctest.h>

#include <random>

#include "quasidisc/polynomial.hpp"
#include "test_support.hpp"

using namespace quasidisc;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(parse_rational("-14/9") == ratio(-14, 9));
  CHECK(parse_rational("+7") == 7);
  CHECK(to_string(ratio(4, -6)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(pow(ratio(2, 3), -2) == ratio(9, 4));
  CHECK(pow(Rational(-1), Integer("100000000000000000001")) == -1);
}

TEST_CASE("poly_add") {
  CHECK(Polynomial{1, 1} + Polynomial{1, -1} == Polynomial(2));
  const Polynomial p{3, 0, ratio(1, 2)};
  CHECK(p + Polynomial() == p);
  const Polynomial sum = Polynomial{0, 0, 1} + Polynomial{0, 1, -1};
  CHECK(sum == Polynomial::x());
  CHECK(sum.degree() == Degree(1));
}

TEST_CASE("poly_mul") {
  CHECK(Polynomial{-1, 1} * Polynomial{1, 1} == Polynomial{-1, 0, 1});
  const Polynomial p{4, -2, 7};
  CHECK(p * Polynomial(1) == p);
  CHECK(Polynomial{2, 2} * Polynomial(3) == Polynomial{6, 6});
  CHECK((p * Polynomial()).is_zero());
}

TEST_CASE("poly_eval") {
  const Polynomial v2{6, 4, 6};
  CHECK(v2(0) == 6);
  CHECK(Polynomial{2, 2}(1) == 4);
  CHECK(Polynomial{ratio(1, 3), 5}(0) == ratio(1, 3));
  CHECK(Polynomial()(17) == 0);
}

TEST_CASE("poly_derivative") {
  CHECK(Polynomial{-1, 0, 1}.derivative() == Polynomial{0, 2});
  CHECK(Polynomial(9).derivative().is_zero());
  CHECK(Polynomial{6, 4, 6}.derivative() == Polynomial{4, 12});
}

TEST_CASE("poly_degree_leading_constant") {
  auto r = degree_leading_constant(Polynomial{6, 4, 6});
  CHECK(r.degree == Degree(2));
  CHECK(r.leading == 6);
  CHECK(r.constant == 6);
  r = degree_leading_constant(Polynomial(1));
  CHECK(r.degree == Degree(0));
  CHECK(r.leading == 1);
  r = degree_leading_constant(Polynomial());
  CHECK_FALSE(r.degree.has_value());
  CHECK(r.constant == 0);
  CHECK_THROWS(static_cast<void>(Polynomial().checked_degree()));
}

TEST_CASE("zero is canonical") {
  const Polynomial z{0, 0, 0};
  CHECK(z.is_zero());
  CHECK(z == Polynomial());
  CHECK(Polynomial::monomial(0, 4).is_zero());
  CHECK(Polynomial::monomial(3, 2) == Polynomial{0, 0, 3});
}

TEST_CASE("divmod and gcd") {
  const Polynomial a = Polynomial{-1, 1} * Polynomial{2, 0, 1};
  const Polynomial b = Polynomial{-1, 1} * Polynomial{5, 3};
  const auto [q, r] = divmod(a, Polynomial{2, 0, 1});
  CHECK(q == Polynomial{-1, 1});
  CHECK(r.is_zero());
  CHECK(gcd(a, b) == Polynomial{-1, 1});
  CHECK(gcd(Polynomial{1, 1}, Polynomial{2, 1}) == Polynomial(1));
}

TEST_CASE("ring properties on random polynomials") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_polynomial(rng, rng() % 5, 6, 3);
    const auto q = testing::random_polynomial(rng, rng() % 5, 6, 3);
    const auto s = testing::random_polynomial(rng, rng() % 4, 6, 3);
    const Rational x0 = testing::random_rational(rng, -4, 4, 3);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p * q).leading() == p.leading() * q.leading());
    CHECK(*(p * q).degree() == *p.degree() + *q.degree());
    CHECK((p * q)(x0) == p(x0) * q(x0));
    CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
  }
}

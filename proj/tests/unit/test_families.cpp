#include <doctest.h>

#include <random>

#include "quasidisc/errors.hpp"
#include "quasidisc/example_families.hpp"
#include "quasidisc/families.hpp"

using namespace quasidisc;

namespace {

SchurParams unit_schur() {
  return {CoefficientProvider::constant(1), CoefficientProvider::constant(0), CoefficientProvider::constant(1)};
}

TurajParams cubic_turaj() {
  TurajParams p;
  p.d = 1;
  p.m = 2;
  p.k = 1;
  p.l = 0;
  p.initial = {Polynomial(1), Polynomial::x()};
  p.g = PolynomialSequence({CoefficientProvider::constant(0), CoefficientProvider::constant(1)});
  p.v = CoefficientProvider::constant(1);
  return p;
}

}  // namespace

TEST_CASE("coefficient providers") {
  const auto t = CoefficientProvider::table({1, 2, 3}, 2);
  CHECK(t(2) == 1);
  CHECK(t(4) == 3);
  CHECK_THROWS_AS(t(1), InvalidParamsError);
  CHECK_THROWS_AS(t(5), InvalidParamsError);
  CHECK(CoefficientProvider::constant(ratio(1, 3))(100) == ratio(1, 3));
  const PolynomialSequence seq({CoefficientProvider::formula([](long n) { return Rational(n); }),
                                CoefficientProvider::constant(1)});
  CHECK(seq(3) == Polynomial{3, 1});
  CHECK(seq.nominal_degree() == 1);
}

TEST_CASE("gen_schur") {
  CHECK(gen_schur(unit_schur(), 0) == Polynomial(1));
  CHECK(gen_schur(unit_schur(), 2) == Polynomial{-1, 0, 1});
  CHECK(gen_schur(unit_schur(), 3) == Polynomial{0, -2, 0, 1});
}

TEST_CASE("gen_ulas") {
  const auto cb = central_binomial::ulas_params();
  CHECK(gen_ulas(cb, 0) == Polynomial(1));
  CHECK(gen_ulas(cb, 2) == Polynomial{6, 4, 6});
  for (long n = 0; n <= 10; ++n) CHECK(gen_ulas(cb, n) == central_binomial::polynomial(n));
  const auto mo = mo_ulas_params(mo_family(0));
  CHECK(gen_ulas(mo, 1) == Polynomial{ratio(-14, 9), 1});
  UlasFamily fam(cb);
  for (long n = 1; n <= 6; ++n) CHECK(fam.at(n).degree() == Degree(fam.predicted_degree(n)));
}

TEST_CASE("ulas validation") {
  auto p = central_binomial::ulas_params();
  p.r1 = Polynomial{1, 1, 1};
  CHECK_THROWS_AS(validate(p), InvalidParamsError);
  p = central_binomial::ulas_params();
  p.shape.l = 2;  // k >= l fails in the strict regime
  CHECK_THROWS_AS(validate(p), InvalidParamsError);
  p.regime = Regime::Relaxed;
  CHECK_NOTHROW(validate(p));
  p = central_binomial::ulas_params();
  p.v = CoefficientProvider::constant(4);  // a_{2,1} q_1 - v_2 p_0 = 3*2 - 4 != 0 still fine
  CHECK_NOTHROW(validate(p));
  p.v = CoefficientProvider::constant(6);  // 3*2 - 6 = 0
  CHECK_THROWS_AS(validate(p), InvalidParamsError);
}

TEST_CASE("ulas degree drop is reported") {
  // relaxed shape with l = 2k lets x^l r_{n-2} cancel the top of f_n r_{n-1}:
  // r_2 = -x^2, r_3 = -(1 + v_3) x^3
  UlasParams p;
  p.shape = {0, 1, 1, 2};
  p.r0 = Polynomial(1);
  p.r1 = Polynomial{0, 1};
  p.f = PolynomialSequence({CoefficientProvider::constant(0), CoefficientProvider::constant(1)});
  p.v = CoefficientProvider::table({2, -1}, 2);
  p.regime = Regime::Relaxed;
  UlasFamily fam(p);
  CHECK(fam.at(2) == Polynomial::monomial(-1, 2));
  CHECK_THROWS_AS(fam.at(3), DegreeDroppedError);
}

TEST_CASE("gen_turaj") {
  const auto p = cubic_turaj();
  CHECK(gen_turaj(p, 2) == Polynomial{1, 0, 0, 1});
  CHECK(gen_turaj(p, 3) == Polynomial{0, 1, 1, 0, 2, 0, 0, 1});
  CHECK(predicted_degree_turaj(p, 2) == 3);
  CHECK(predicted_degree_turaj(p, 3) == 7);
  const auto lc = predicted_lead_const_turaj(p, 2);
  CHECK(lc.leading == 1);
  CHECK(lc.constant == 1);
  CHECK(predicted_lead_const_turaj(p, 1).leading == 1);
}

TEST_CASE("turaj validation") {
  auto p = cubic_turaj();
  p.middle.push_back({{2, 0}, PolynomialSequence({CoefficientProvider::constant(0)})});
  CHECK_THROWS_AS(validate(p), InvalidParamsError);  // |alpha| = m
  p = cubic_turaj();
  p.initial = {Polynomial{0, 0, 1}, Polynomial::x()};
  CHECK_THROWS_AS(validate(p), InvalidParamsError);  // degrees decrease
  p = cubic_turaj();
  p.middle.push_back({{1, 0}, PolynomialSequence({CoefficientProvider::constant(1)})});
  TurajFamily fam(p);
  CHECK_THROWS(fam.at(2));  // t(0) != 0
}

TEST_CASE("turaj predictions on random families") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-4, 4);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 40; ++trial) {
    TurajParams p;
    p.d = 1 + rng() % 2;
    p.m = 1 + static_cast<unsigned>(rng() % 3);
    p.k = 1 + rng() % 2;
    p.l = rng() % (p.k + 1);
    std::size_t deg = 0;
    for (std::size_t s = 0; s <= p.d; ++s) {
      deg += rng() % 2;
      std::vector<Rational> c(deg + 1);
      for (auto& x : c) x = coeff(rng);
      if (c.back() == 0) c.back() = 1;
      p.initial.emplace_back(std::move(c));
    }
    std::vector<CoefficientProvider> g;
    for (std::size_t s = 0; s <= p.k; ++s) g.push_back(CoefficientProvider::constant(coeff(rng)));
    p.g = PolynomialSequence(std::move(g));
    p.v = CoefficientProvider::constant(coeff(rng));
    try {
      validate(p);
      TurajFamily fam(p);
      const long d = static_cast<long>(p.d);
      for (long n = d; n <= d + 3; ++n) {
        if (predicted_degree_turaj(p, n) > 80) break;
        const Polynomial& r = fam.at(n);
        CHECK(Integer(static_cast<long>(*r.degree())) == predicted_degree_turaj(p, n));
        const auto lc = predicted_lead_const_turaj(p, n);
        CHECK(lc.leading == r.leading());
        if (p.l > 0) CHECK(lc.constant == r.constant());
      }
      ++tested;
    } catch (const Error&) {
    }
  }
  CHECK(tested >= 20);
}

TEST_CASE("gen_quasi") {
  UlasFamily fam(central_binomial::ulas_params());
  CHECK(gen_quasi(fam, 2, 0) == fam.at(2));
  CHECK(gen_quasi(fam, 2, 1) == Polynomial{8, 6, 6});
}

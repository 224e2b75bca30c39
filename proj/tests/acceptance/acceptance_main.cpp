// Acceptance suite: one PASS/FAIL line per criterion, exact equality only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quasidisc/errors.hpp"
#include "quasidisc/example_families.hpp"
#include "quasidisc/formulas.hpp"
#include "quasidisc/hypergeom.hpp"
#include "quasidisc/resultant.hpp"
#include "quasidisc/verify.hpp"

using namespace quasidisc;

namespace {

constexpr std::uint64_t kSeed = 20261019;

struct Tally {
  long checked = 0;
  long failed = 0;
  long skipped = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      ++failed;
      if (notes.size() < 5) notes.push_back("mismatch: " + what);
    }
  }
  void skip(const std::string& why) {
    ++skipped;
    if (notes.size() < 5) notes.push_back("skipped: " + why);
  }
};

int run_criterion(int number, const std::string& title, double budget_seconds,
                  const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    ++t.failed;
    t.notes.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = t.failed == 0 && t.checked > 0 && secs < budget_seconds;
  std::printf("criterion %2d  %s  %-44s %6ld checked  %3ld skipped  %7.2fs (budget %.0fs)\n", number,
              pass ? "PASS" : "FAIL", title.c_str(), t.checked, t.skipped, secs, budget_seconds);
  for (const auto& note : t.notes) std::printf("              %s\n", note.c_str());
  return pass ? 0 : 1;
}

std::string where(const std::string& family, long n, const Rational* c = nullptr) {
  std::ostringstream os;
  os << family << " n=" << n;
  if (c) os << " c=" << to_string(*c);
  return os.str();
}

const std::vector<Rational> kCs = {Rational(0), Rational(1), Rational(-1), ratio(1, 2), Rational(-3)};
const std::vector<ShiftedHypergeom> kShifted = {{ratio(1, 2), Rational(-1), ratio(1, 3)},
                                                {ratio(1, 3), Rational(-2), ratio(5, 7)}};

// Every (family, n, c) of criterion 5, with the generic discriminant formula.
struct QuasiCase {
  std::string family;
  UlasFamily* fam;
  const DiffRelation* rel;
  long n;
  Rational c;
};

template <class Fn>
void for_each_quasi_case(Fn&& fn) {
  UlasFamily cb(central_binomial::ulas_params());
  const DiffRelation cb_rel = central_binomial::diff_relation();
  for (long n = 2; n <= 8; ++n)
    for (const auto& c : kCs) fn(QuasiCase{"central-binomial", &cb, &cb_rel, n, c});
  for (const auto& p : kShifted) {
    UlasFamily fam(shifted_hypergeom::ulas_params(p));
    const DiffRelation rel = shifted_hypergeom::diff_relation(p);
    for (long n = 2; n <= 5; ++n)
      for (const auto& c : kCs) fn(QuasiCase{"shifted-hypergeometric", &fam, &rel, n, c});
  }
  for (int r : {0, 4, 6, 10}) {
    const MOFamily mo = mo_family(r);
    UlasFamily fam(mo_ulas_params(mo));
    const DiffRelation rel = mo_diff_relation(mo);
    for (long n = 2; n <= 6; ++n)
      for (const auto& c : kCs) fn(QuasiCase{"mahlburg-ono r=" + std::to_string(r), &fam, &rel, n, c});
  }
}

}  // namespace

int main() {
  int failures = 0;

  failures += run_criterion(1, "Schur sanity (a=1, b=0, c=1)", 1, [](Tally& t) {
    const SchurParams p{CoefficientProvider::constant(1), CoefficientProvider::constant(0),
                        CoefficientProvider::constant(1)};
    SchurFamily fam(p);
    t.expect(schur_resultant(p, 2) == -1, "n=2 closed form != -1");
    for (long n = 2; n <= 10; ++n) {
      t.expect(schur_resultant(p, n) == resultant(fam.at(n), fam.at(n - 1)), where("schur", n));
    }
  });

  failures += run_criterion(2, "Ulas resultant, central binomial family", 5, [](Tally& t) {
    UlasFamily fam(central_binomial::ulas_params());
    t.expect(resultant(fam.at(2), fam.at(1)) == 32, "oracle Res(V_2, V_1) != 32");
    t.expect(ulas_resultant(fam, 2, UlasLine::First) == 32, "first line at n=2 != 32");
    t.expect(ulas_resultant(fam, 2, UlasLine::Second) == 32, "second line at n=2 != 32");
    for (long n = 2; n <= 8; ++n) {
      const Rational oracle = resultant(fam.at(n), fam.at(n - 1));
      t.expect(ulas_resultant(fam, n, UlasLine::First) == oracle, where("first line", n));
      t.expect(ulas_resultant(fam, n, UlasLine::Second) == oracle, where("second line", n));
    }
  });

  failures += run_criterion(3, "Ulas resultant, 100 random families", 60, [](Tally& t) {
    FuzzRng rng(kSeed);
    int relaxed = 0;
    for (int idx = 0; idx < 100; ++idx) {
      const Regime regime = idx % 2 == 0 ? Regime::Strict : Regime::Relaxed;
      UlasFamily fam(random_ulas_params(rng, regime, 5));
      const auto& s = fam.params().shape;
      relaxed += (s.l > s.k) ? 1 : 0;
      for (long n = 2; n <= 5; ++n) {
        const Rational oracle = resultant(fam.at(n), fam.at(n - 1));
        t.expect(ulas_resultant(fam, n, UlasLine::First) == oracle, where("fuzz first line #" + std::to_string(idx), n));
        t.expect(ulas_resultant(fam, n, UlasLine::Second) == oracle, where("fuzz second line #" + std::to_string(idx), n));
      }
    }
    t.expect(relaxed == 50, "expected 50 families outside the strict regime");
  });

  failures += run_criterion(4, "Turaj resultant, 50 random families", 120, [](Tally& t) {
    FuzzRng rng(kSeed + 1);
    std::set<std::pair<std::size_t, unsigned>> shapes;
    int with_middle = 0;
    for (int idx = 0; idx < 50; ++idx) {
      const bool middle = idx % 2 == 1;
      const TurajParams p = random_turaj_params(rng, middle, 80);
      shapes.insert({p.d, p.m});
      with_middle += p.middle.empty() ? 0 : 1;
      TurajFamily fam(p);
      const long d = static_cast<long>(p.d);
      for (long n = d + 1; n <= d + 3; ++n) {
        if (predicted_degree_turaj(p, n) > 80) break;
        t.expect(turaj_resultant(fam, n) == resultant(fam.at(n), fam.at(n - 1)),
                 where("turaj fuzz #" + std::to_string(idx), n));
      }
    }
    t.expect(shapes.size() == 6, "not every (d, m) in {1,2} x {1,2,3} was drawn");
    t.expect(with_middle == 25, "expected 25 families with middle terms");
  });

  failures += run_criterion(5, "quasi-discriminant vs oracle", 120, [](Tally& t) {
    UlasFamily cb(central_binomial::ulas_params());
    t.expect(quasi_discriminant(cb, central_binomial::diff_relation(), 2, 0) == -128, "disc(V_2) != -128");
    for_each_quasi_case([&t](const QuasiCase& q) {
      const Rational oracle = discriminant(gen_quasi(*q.fam, q.n, q.c));
      try {
        t.expect(quasi_discriminant(*q.fam, *q.rel, q.n, q.c) == oracle, where(q.family, q.n, &q.c));
      } catch (const HypothesisViolatedError& e) {
        t.skip(where(q.family, q.n, &q.c) + ": " + e.what());
      } catch (const DegenerateBError& e) {
        t.skip(where(q.family, q.n, &q.c) + ": " + e.what());
      }
    });
  });

  failures += run_criterion(6, "Mahlburg-Ono discriminant, r in {0,4,6,10}", 30, [](Tally& t) {
    for (int r : {0, 4, 6, 10}) {
      const MOFamily mo = mo_family(r);
      t.expect(mahlburg_ono_disc(mo, 1) == 1, where("n=1 base case r=" + std::to_string(r), 1));
      for (long n = 1; n <= 8; ++n) {
        t.expect(mahlburg_ono_disc(mo, n) == discriminant(v_r_polynomial(mo, n)), where("r=" + std::to_string(r), n));
      }
    }
  });

  failures += run_criterion(7, "hypergeometric identity suite", 30, [](Tally& t) {
    FuzzRng rng(kSeed + 2);
    const auto non_integer = [&rng] {
      for (;;) {
        const Rational q = ratio(rng.draw(-20, 20), rng.draw(2, 7));
        if (!is_integer(q)) return q;
      }
    };
    for (int idx = 0; idx < 50; ++idx) {
      const HypergeomSpec spec{Rational(-rng.draw(0, 7)), non_integer(), non_integer()};
      t.expect(check_derivative_identity(spec).holds(), "derivative identity draw " + std::to_string(idx));
    }
    for (int which = 1; which <= 4; ++which) {
      for (int idx = 0; idx < 50; ++idx) {
        HypergeomSpec spec{non_integer(), non_integer(), non_integer()};
        (which == 4 ? spec.b : spec.a) = Rational(-rng.draw(0, 6));
        t.expect(check_contiguous_relation(which, spec).holds(),
                 "contiguous relation " + std::to_string(which) + " draw " + std::to_string(idx));
      }
    }
    for (int r : {0, 4, 6, 10}) {
      const MOFamily mo = mo_family(r);
      UlasFamily fam(mo_ulas_params(mo));
      for (long n = 0; n <= 8; ++n) t.expect(fam.at(n) == v_r_polynomial(mo, n), where("recurrence r=" + std::to_string(r), n));
      for (long n = 1; n <= 8; ++n) {
        const auto check = check_diff_relation(fam, mo_diff_relation(mo), n);
        t.expect(check.lower_holds, where("lower differential relation r=" + std::to_string(r), n));
        t.expect(check.upper_holds, where("upper differential relation r=" + std::to_string(r), n));
      }
    }
  });

  failures += run_criterion(8, "Res(r_{n;c}, r_{n-1}) = Res(r_n, r_{n-1})", 120, [](Tally& t) {
    for_each_quasi_case([&t](const QuasiCase& q) {
      const Polynomial& prev = q.fam->at(q.n - 1);
      t.expect(resultant(gen_quasi(*q.fam, q.n, q.c), prev) == resultant(q.fam->at(q.n), prev),
               where(q.family, q.n, &q.c));
    });
  });

  failures += run_criterion(9, "degree / leading / constant predictions", 120, [](Tally& t) {
    FuzzRng ulas_rng(kSeed);
    for (int idx = 0; idx < 100; ++idx) {
      UlasFamily fam(random_ulas_params(ulas_rng, idx % 2 == 0 ? Regime::Strict : Regime::Relaxed, 5));
      for (long n = 0; n <= 5; ++n) {
        t.expect(fam.at(n).degree() == Degree(fam.predicted_degree(n)), where("ulas degree #" + std::to_string(idx), n));
      }
    }
    FuzzRng turaj_rng(kSeed + 1);
    for (int idx = 0; idx < 50; ++idx) {
      const TurajParams p = random_turaj_params(turaj_rng, idx % 2 == 1, 80);
      TurajFamily fam(p);
      const long d = static_cast<long>(p.d);
      for (long n = d; n <= d + 3; ++n) {
        if (predicted_degree_turaj(p, n) > 80) break;
        const Polynomial& r = fam.at(n);
        const std::string id = "turaj #" + std::to_string(idx);
        t.expect(Integer(static_cast<unsigned long>(*r.degree())) == predicted_degree_turaj(p, n), where(id + " degree", n));
        const LeadConst lc = predicted_lead_const_turaj(p, n);
        t.expect(lc.leading == r.leading(), where(id + " leading", n));
        if (p.l > 0) t.expect(lc.constant == r.constant(), where(id + " constant", n));
      }
    }
  });

  failures += run_criterion(10, "sign-exponent parity audits", 30, [](Tally& t) {
    t.expect(mahlburg_ono_parity(4).direct == 52, "Mahlburg-Ono exponent at n=4 != 52");
    for (long n = 1; n <= 40; ++n) {
      const ParityReport mo = mahlburg_ono_parity(n);
      t.expect(mo.consistent() && mo.even(), where("mahlburg-ono", n));
      for (long beta = -1; beta >= -12; --beta) {
        const ParityReport sh = shifted_hypergeom_parity(beta, n);
        t.expect(sh.consistent() && sh.even(), where("shifted beta=" + std::to_string(beta), n));
      }
    }
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}

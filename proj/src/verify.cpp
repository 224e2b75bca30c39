#include "quasidisc/verify.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "quasidisc/errors.hpp"
#include "quasidisc/example_families.hpp"
#include "quasidisc/formulas.hpp"
#include "quasidisc/hypergeom.hpp"
#include "quasidisc/resultant.hpp"
#include "quasidisc/spec_io.hpp"

namespace quasidisc {

using nlohmann::json;

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "ulas") return Suite::Ulas;
  if (name == "turaj") return Suite::Turaj;
  if (name == "quasi") return Suite::Quasi;
  if (name == "hypergeom") return Suite::Hypergeom;
  throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Ulas: return "ulas";
    case Suite::Turaj: return "turaj";
    case Suite::Quasi: return "quasi";
    case Suite::Hypergeom: return "hypergeom";
  }
  return "unknown";
}

std::size_t VerificationReport::passed() const {
  std::size_t count = 0;
  for (const auto& c : cases) count += (!c.skipped() && c.equal) ? 1 : 0;
  return count;
}

std::size_t VerificationReport::failed() const {
  std::size_t count = 0;
  for (const auto& c : cases) count += c.failed() ? 1 : 0;
  return count;
}

std::size_t VerificationReport::skipped() const {
  std::size_t count = 0;
  for (const auto& c : cases) count += c.skipped() ? 1 : 0;
  return count;
}

int VerificationReport::exit_code() const {
  if (failed() > 0) return 4;
  if (!cases.empty() && skipped() == cases.size()) return 5;
  return 0;
}

json VerificationReport::to_json() const {
  json out;
  out["suite"] = suite;
  out["seed"] = seed;
  json list = json::array();
  json failures = json::array();
  for (std::size_t idx = 0; idx < cases.size(); ++idx) {
    const auto& c = cases[idx];
    json item = {{"family", c.family},
                 {"check", c.check},
                 {"n", c.n},
                 {"c", c.c ? json(to_string(*c.c)) : json(nullptr)},
                 {"quantity", c.quantity},
                 {"formula_value", c.formula_value},
                 {"oracle_value", c.oracle_value},
                 {"equal", c.equal},
                 {"wall_time", c.wall_time}};
    if (c.skipped_reason) item["skipped_reason"] = *c.skipped_reason;
    if (c.error) item["error"] = *c.error;
    if (c.failed()) failures.push_back({{"index", idx}, {"family", c.family}, {"check", c.check}, {"n", c.n}});
    list.push_back(std::move(item));
  }
  out["cases"] = std::move(list);
  out["totals"] = {{"cases", cases.size()}, {"passed", passed()}, {"failed", failed()}, {"skipped", skipped()}};
  out["failures"] = std::move(failures);
  return out;
}

long FuzzRng::nonzero(long lo, long hi) {
  for (;;) {
    const long v = draw(lo, hi);
    if (v != 0) return v;
  }
}

// ---------------------------------------------------------------------------

namespace {

constexpr long kBound = 5;

Polynomial random_poly(FuzzRng& rng, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  for (auto& c : coeffs) c = Rational(rng.draw(-kBound, kBound));
  coeffs.back() = Rational(rng.nonzero(-kBound, kBound));
  return Polynomial(std::move(coeffs));
}

CoefficientProvider random_table(FuzzRng& rng, long first, long last, bool nonzero) {
  std::vector<Rational> values;
  for (long n = first; n <= last; ++n) {
    values.emplace_back(nonzero ? rng.nonzero(-kBound, kBound) : rng.draw(-kBound, kBound));
  }
  return CoefficientProvider::table(std::move(values), first);
}

}  // namespace

UlasParams random_ulas_params(FuzzRng& rng, Regime regime, long n_max) {
  for (;;) {
    UlasParams p;
    p.regime = regime;
    const std::size_t k = static_cast<std::size_t>(rng.draw(1, 2));
    std::size_t l = 0;
    std::size_t i = static_cast<std::size_t>(rng.draw(0, 2));
    std::size_t j = 0;
    if (regime == Regime::Strict) {
      l = static_cast<std::size_t>(rng.draw(0, static_cast<long>(k)));
      j = i + static_cast<std::size_t>(rng.draw(0, 2));
    } else {
      // genuinely relaxed: k < l <= 2k, so j >= i + l - k
      l = static_cast<std::size_t>(rng.draw(static_cast<long>(k) + 1, 2 * static_cast<long>(k)));
      j = i + (l - k) + static_cast<std::size_t>(rng.draw(0, 1));
    }
    p.shape = {i, j, k, l};
    p.r0 = random_poly(rng, i);
    p.r1 = random_poly(rng, j);
    std::vector<CoefficientProvider> f;
    for (std::size_t s = 0; s <= k; ++s) f.push_back(random_table(rng, 2, n_max, s == k));
    p.f = PolynomialSequence(std::move(f));
    p.v = random_table(rng, 2, n_max, true);
    try {
      validate(p);
      UlasFamily fam(p);
      for (long n = 0; n <= n_max; ++n) fam.at(n);
      return p;
    } catch (const Error&) {
    }
  }
}

TurajParams random_turaj_params(FuzzRng& rng, bool with_middle, long degree_cap) {
  for (;;) {
    TurajParams p;
    p.d = static_cast<std::size_t>(rng.draw(1, 2));
    p.m = static_cast<unsigned>(rng.draw(1, 3));
    p.k = static_cast<std::size_t>(rng.draw(with_middle ? 2 : 1, 3));
    p.l = static_cast<std::size_t>(rng.draw(0, static_cast<long>(p.k)));
    const long d = static_cast<long>(p.d);
    std::size_t degree = static_cast<std::size_t>(rng.draw(0, 1));
    for (std::size_t s = 0; s <= p.d; ++s) {
      p.initial.push_back(random_poly(rng, degree));
      degree += static_cast<std::size_t>(rng.draw(0, 1));
    }
    std::vector<CoefficientProvider> g;
    for (std::size_t s = 0; s <= p.k; ++s) g.push_back(random_table(rng, d + 1, d + 3, s == p.k));
    p.g = PolynomialSequence(std::move(g));
    p.v = random_table(rng, d + 1, d + 3, true);
    if (with_middle) {
      const long terms = rng.draw(1, 2);
      for (long t = 0; t < terms; ++t) {
        MiddleTerm term;
        long budget = rng.draw(0, static_cast<long>(p.m) - 1);
        for (std::size_t s = 0; s <= p.d; ++s) {
          const long take = s == p.d ? budget : rng.draw(0, budget);
          term.alpha.push_back(static_cast<unsigned>(take));
          budget -= take;
        }
        std::vector<CoefficientProvider> coeffs{CoefficientProvider::constant(0)};
        for (std::size_t s = 1; s < p.k; ++s) coeffs.push_back(random_table(rng, d + 1, d + 3, false));
        term.t = PolynomialSequence(std::move(coeffs));
        p.middle.push_back(std::move(term));
      }
    }
    try {
      validate(p);
      TurajFamily fam(p);
      for (long n = 0; n <= d + 3; ++n) {
        if (predicted_degree_turaj(p, n) > degree_cap) break;
        fam.at(n);
      }
      return p;
    } catch (const Error&) {
    }
  }
}

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;
using ValueFn = std::function<json()>;

json value(const Rational& r) { return to_json(r); }
json value(const Polynomial& p) { return to_json(p); }

class Collector {
 public:
  explicit Collector(std::vector<VerificationCase>& out) : out_(out) {}

  void compare(const std::string& family, const std::string& check, long n, std::optional<Rational> c,
               const std::string& quantity, const ValueFn& formula, const ValueFn& oracle) {
    VerificationCase vc;
    vc.family = family;
    vc.check = check;
    vc.n = n;
    vc.c = std::move(c);
    vc.quantity = quantity;
    const auto start = Clock::now();
    try {
      vc.oracle_value = oracle();
      try {
        vc.formula_value = formula();
        vc.equal = vc.formula_value == vc.oracle_value;
      } catch (const HypothesisViolatedError& e) {
        vc.skipped_reason = e.what();
      } catch (const DegenerateBError& e) {
        vc.skipped_reason = e.what();
      } catch (const ConditionViolatedError& e) {
        vc.skipped_reason = e.what();
      }
    } catch (const std::exception& e) {
      vc.error = e.what();
    }
    vc.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
    out_.push_back(std::move(vc));
  }

 private:
  std::vector<VerificationCase>& out_;
};

const std::vector<Rational>& c_set() {
  static const std::vector<Rational> cs = {Rational(0), Rational(1), Rational(-1), ratio(1, 2), Rational(-3)};
  return cs;
}

const std::vector<ShiftedHypergeom>& shifted_params() {
  static const std::vector<ShiftedHypergeom> ps = {{ratio(1, 2), Rational(-1), ratio(1, 3)},
                                                   {ratio(1, 3), Rational(-2), ratio(5, 7)}};
  return ps;
}

std::string shifted_id(const ShiftedHypergeom& p) {
  return "shifted-hypergeometric(" + to_string(p.alpha) + "," + to_string(p.beta) + "," + to_string(p.gamma) + ")";
}

std::string mo_id(int r) { return "mahlburg-ono(r=" + std::to_string(r) + ")"; }

std::string numbered(const std::string& stem, int idx) {
  std::string digits = std::to_string(idx);
  while (digits.size() < 3) digits.insert(digits.begin(), '0');
  return stem + "-" + digits;
}

void ulas_lines(Collector& col, const std::string& id, UlasFamily& fam, long n_lo, long n_hi) {
  for (long n = n_lo; n <= n_hi; ++n) {
    const auto oracle = [&fam, n] { return value(resultant(fam.at(n), fam.at(n - 1))); };
    col.compare(id, "ulas-first-line", n, std::nullopt, "resultant",
                [&fam, n] { return value(ulas_resultant(fam, n, UlasLine::First)); }, oracle);
    col.compare(id, "ulas-second-line", n, std::nullopt, "resultant",
                [&fam, n] { return value(ulas_resultant(fam, n, UlasLine::Second)); }, oracle);
  }
}

void ulas_suite(Collector& col, std::uint64_t seed) {
  {
    const SchurParams p{CoefficientProvider::constant(1), CoefficientProvider::constant(0),
                        CoefficientProvider::constant(1)};
    SchurFamily fam(p);
    for (long n = 2; n <= 10; ++n) {
      col.compare("schur(1,0,1)", "schur-closed-form", n, std::nullopt, "resultant",
                  [&] { return value(schur_resultant(p, n)); },
                  [&] { return value(resultant(fam.at(n), fam.at(n - 1))); });
    }
  }
  {
    UlasFamily fam(central_binomial::ulas_params());
    ulas_lines(col, "central-binomial", fam, 2, 8);
    for (long n = 2; n <= 8; ++n) {
      col.compare("central-binomial", "family-display", n, std::nullopt, "resultant",
                  [n] { return value(central_binomial::resultant_closed(n)); },
                  [&] { return value(resultant(fam.at(n), fam.at(n - 1))); });
    }
  }
  for (const auto& p : shifted_params()) {
    UlasFamily fam(shifted_hypergeom::ulas_params(p));
    const std::string id = shifted_id(p);
    ulas_lines(col, id, fam, 2, 5);
    const Rational r1 = resultant(fam.at(1), fam.at(0));
    for (long n = 2; n <= 5; ++n) {
      col.compare(id, "family-display", n, std::nullopt, "resultant",
                  [&, n] { return value(shifted_hypergeom::resultant_closed(p, n, r1)); },
                  [&, n] { return value(resultant(fam.at(n), fam.at(n - 1))); });
    }
  }
  for (int r : {0, 4, 6, 10}) {
    UlasFamily fam(mo_ulas_params(mo_family(r)));
    ulas_lines(col, mo_id(r), fam, 2, 6);
  }

  FuzzRng rng(seed);
  constexpr long kNMax = 5;
  for (int idx = 0; idx < 100; ++idx) {
    const Regime regime = idx % 2 == 0 ? Regime::Strict : Regime::Relaxed;
    const std::string id = numbered(regime == Regime::Strict ? "ulas-fuzz-strict" : "ulas-fuzz-relaxed", idx);
    UlasFamily fam(random_ulas_params(rng, regime, kNMax));
    ulas_lines(col, id, fam, 2, kNMax);
    for (long n = 0; n <= kNMax; ++n) {
      col.compare(id, "ulas-degree", n, std::nullopt, "degree",
                  [&, n] { return json(fam.predicted_degree(n)); },
                  [&, n] { return json(fam.at(n).checked_degree()); });
    }
  }
}

void turaj_checks(Collector& col, const std::string& id, const TurajParams& p, long degree_cap) {
  TurajFamily fam(p);
  const long d = static_cast<long>(p.d);
  for (long n = d; n <= d + 3; ++n) {
    if (predicted_degree_turaj(p, n) > degree_cap) break;
    col.compare(id, "turaj-degree", n, std::nullopt, "degree",
                [&, n] { return json(predicted_degree_turaj(p, n).get_str()); },
                [&, n] { return json(std::to_string(fam.at(n).checked_degree())); });
    col.compare(id, "turaj-leading", n, std::nullopt, "leading",
                [&, n] { return value(predicted_lead_const_turaj(p, n).leading); },
                [&, n] { return value(fam.at(n).leading()); });
    if (p.l > 0) {
      col.compare(id, "turaj-constant", n, std::nullopt, "constant",
                  [&, n] { return value(predicted_lead_const_turaj(p, n).constant); },
                  [&, n] { return value(fam.at(n).constant()); });
    }
    if (n >= d + 1) {
      col.compare(id, "turaj-closed-form", n, std::nullopt, "resultant",
                  [&, n] { return value(turaj_resultant(fam, n)); },
                  [&, n] { return value(resultant(fam.at(n), fam.at(n - 1))); });
    }
  }
}

void turaj_suite(Collector& col, std::uint64_t seed) {
  constexpr long kCap = 80;
  const FamilySpec cubic = preset_spec("turaj-cubic");
  turaj_checks(col, "turaj-cubic", std::get<TurajParams>(cubic.params), kCap);
  FuzzRng rng(seed ^ 0x7475726171ULL);
  for (int idx = 0; idx < 50; ++idx) {
    const bool middle = idx % 2 == 1;
    const std::string id = numbered(middle ? "turaj-fuzz-middle" : "turaj-fuzz", idx);
    turaj_checks(col, id, random_turaj_params(rng, middle, kCap), kCap);
  }
}

void quasi_family(Collector& col, const std::string& id, UlasFamily& fam, const DiffRelation& rel, long n_lo,
                  long n_hi, const std::function<Rational(long, const Rational&)>& display) {
  for (long n = n_lo; n <= n_hi; ++n) {
    for (const Rational& c : c_set()) {
      const auto oracle = [&fam, n, c] { return value(discriminant(gen_quasi(fam, n, c))); };
      col.compare(id, "quasi-disc", n, c, "discriminant",
                  [&fam, &rel, n, c] { return value(quasi_discriminant(fam, rel, n, c)); }, oracle);
      if (display) col.compare(id, "family-display", n, c, "discriminant", [&display, n, c] { return value(display(n, c)); }, oracle);
      col.compare(id, "resultant-invariance", n, c, "resultant",
                  [&fam, n, c] { return value(resultant(gen_quasi(fam, n, c), fam.at(n - 1))); },
                  [&fam, n] { return value(resultant(fam.at(n), fam.at(n - 1))); });
    }
  }
}

void quasi_suite(Collector& col) {
  {
    UlasFamily fam(central_binomial::ulas_params());
    quasi_family(col, "central-binomial", fam, central_binomial::diff_relation(), 2, 8,
                 [](long n, const Rational& c) { return central_binomial::discriminant_closed(n, c); });
  }
  for (const auto& p : shifted_params()) {
    UlasFamily fam(shifted_hypergeom::ulas_params(p));
    const Rational r1 = resultant(fam.at(1), fam.at(0));
    quasi_family(col, shifted_id(p), fam, shifted_hypergeom::diff_relation(p), 2, 5,
                 [p, r1](long n, const Rational& c) { return shifted_hypergeom::discriminant_closed(p, n, c, r1); });
  }
  for (int r : {0, 4, 6, 10}) {
    const MOFamily mo = mo_family(r);
    UlasFamily fam(mo_ulas_params(mo));
    const DiffRelation rel = mo_diff_relation(mo);
    col.compare(mo_id(r), "quasi-disc", 1, Rational(0), "discriminant",
                [&] { return value(quasi_discriminant(fam, rel, 1, 0)); },
                [&] { return value(discriminant(fam.at(1))); });
    quasi_family(col, mo_id(r), fam, rel, 2, 6, nullptr);
  }
}

Rational random_non_integer(FuzzRng& rng) {
  for (;;) {
    const Rational q = ratio(rng.draw(-20, 20), rng.draw(2, 7));
    if (!is_integer(q)) return q;
  }
}

void identity(Collector& col, const std::string& family, const std::string& check, long n,
              const std::function<IdentityCheck()>& run) {
  // Both sides come from one evaluation; the oracle side is the right-hand side.
  auto result = std::make_shared<std::optional<IdentityCheck>>();
  col.compare(family, check, n, std::nullopt, "identity",
              [result] { return value((*result)->lhs); },
              [result, &run] {
                *result = run();
                return value((*result)->rhs);
              });
}

void hypergeom_suite(Collector& col, std::uint64_t seed) {
  for (int r : {0, 4, 6, 10}) {
    const MOFamily mo = mo_family(r);
    for (long n = 1; n <= 8; ++n) {
      col.compare(mo_id(r), "mo-disc", n, std::nullopt, "discriminant",
                  [&, n] { return value(mahlburg_ono_disc(mo, n)); },
                  [&, n] { return value(discriminant(v_r_polynomial(mo, n))); });
    }
  }

  FuzzRng rng(seed ^ 0x6879706572ULL);
  for (int idx = 0; idx < 50; ++idx) {
    const HypergeomSpec spec{Rational(-rng.draw(0, 7)), random_non_integer(rng), random_non_integer(rng)};
    identity(col, numbered("2f1-draw", idx), "derivative-identity", 0,
             [spec] { return check_derivative_identity(spec); });
  }
  for (int which = 1; which <= 4; ++which) {
    for (int idx = 0; idx < 50; ++idx) {
      HypergeomSpec spec{random_non_integer(rng), random_non_integer(rng), random_non_integer(rng)};
      const Rational n = Rational(-rng.draw(0, 6));
      (which == 4 ? spec.b : spec.a) = n;
      identity(col, numbered("2f1-draw", idx), "contiguous-relation-" + std::to_string(which), 0,
               [which, spec] { return check_contiguous_relation(which, spec); });
    }
  }

  for (int r : {0, 4, 6, 10}) {
    const MOFamily mo = mo_family(r);
    UlasFamily fam(mo_ulas_params(mo));
    const DiffRelation rel = mo_diff_relation(mo);
    for (long n = 0; n <= 8; ++n) {
      col.compare(mo_id(r), "mo-recurrence", n, std::nullopt, "identity",
                  [&, n] { return value(fam.at(n)); }, [&, n] { return value(v_r_polynomial(mo, n)); });
    }
    for (long n = 1; n <= 8; ++n) {
      const auto lhs = [&, n] { return value(rel.F * v_r_polynomial(mo, n).derivative()); };
      col.compare(mo_id(r), "mo-diff-lower", n, std::nullopt, "identity",
                  [&, n] { return value(rel.G1(n) * v_r_polynomial(mo, n) + rel.G2(n) * v_r_polynomial(mo, n - 1)); },
                  lhs);
      col.compare(mo_id(r), "mo-diff-upper", n, std::nullopt, "identity",
                  [&, n] { return value(rel.H1(n) * v_r_polynomial(mo, n) + rel.H2(n) * v_r_polynomial(mo, n + 1)); },
                  lhs);
    }
  }

  const auto parity = [&col](const std::string& family, long n, const ParityReport& report) {
    col.compare(family, "parity", n, std::nullopt, "parity",
                [report] { return report.even() ? value(report.closed_form) : json("odd"); },
                [report] { return value(Rational(report.direct)); });
  };
  for (long n = 1; n <= 24; ++n) {
    parity("mahlburg-ono", n, mahlburg_ono_parity(n));
    for (long beta = -1; beta >= -6; --beta) {
      parity("shifted-hypergeometric(beta=" + std::to_string(beta) + ")", n, shifted_hypergeom_parity(beta, n));
    }
  }
}

}  // namespace

VerificationReport run_verification(Suite suite, std::uint64_t seed) {
  VerificationReport report;
  report.suite = suite_name(suite);
  report.seed = seed;
  Collector col(report.cases);
  if (suite == Suite::All || suite == Suite::Ulas) ulas_suite(col, seed);
  if (suite == Suite::All || suite == Suite::Turaj) turaj_suite(col, seed);
  if (suite == Suite::All || suite == Suite::Quasi) quasi_suite(col);
  if (suite == Suite::All || suite == Suite::Hypergeom) hypergeom_suite(col, seed);
  return report;
}

}  // namespace quasidisc

#include "quasidisc/spec_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "quasidisc/errors.hpp"
#include "quasidisc/formulas.hpp"
#include "quasidisc/resultant.hpp"

namespace quasidisc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SpecError(path + ": " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

Rational rational_at(const json& value, const std::string& path) {
  if (value.is_number_integer()) return Rational(Integer(value.get<long>()));
  if (!value.is_string()) fail(path, "expected an exact rational string \"p/q\"");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

long integer_at(const json& value, const std::string& path) {
  if (!value.is_number_integer()) fail(path, "expected an integer");
  return value.get<long>();
}

std::size_t size_at(const json& value, const std::string& path) {
  const long v = integer_at(value, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

Polynomial polynomial_at(const json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected a coefficient array (low to high)");
  std::vector<Rational> coeffs;
  for (std::size_t s = 0; s < value.size(); ++s) {
    coeffs.push_back(rational_at(value[s], path + "[" + std::to_string(s) + "]"));
  }
  return Polynomial(std::move(coeffs));
}

// "p/q" -> constant; {"table": [...], "first": k}; {"num": [...], "den": [...]}
// for a rational function of n with coefficients low to high.
CoefficientProvider provider_at(const json& value, const std::string& path) {
  if (value.is_string() || value.is_number_integer()) {
    return CoefficientProvider::constant(rational_at(value, path));
  }
  if (!value.is_object()) fail(path, "expected a rational string or a provider object");
  if (value.contains("table")) {
    const json& table = value["table"];
    if (!table.is_array() || table.empty()) fail(path + ".table", "expected a nonempty array");
    std::vector<Rational> values;
    for (std::size_t s = 0; s < table.size(); ++s) {
      values.push_back(rational_at(table[s], path + ".table[" + std::to_string(s) + "]"));
    }
    const long first = value.contains("first") ? integer_at(value["first"], path + ".first") : 0;
    return CoefficientProvider::table(std::move(values), first);
  }
  if (value.contains("num")) {
    const Polynomial num = polynomial_at(value["num"], path + ".num");
    const Polynomial den = value.contains("den") ? polynomial_at(value["den"], path + ".den") : Polynomial(1);
    if (den.is_zero()) fail(path + ".den", "zero denominator");
    return CoefficientProvider::formula([num, den, path](long n) {
      const Rational d = den(Rational(n));
      if (d == 0) throw InvalidParamsError(path + ": denominator vanishes at n = " + std::to_string(n));
      return Rational(num(Rational(n)) / d);
    });
  }
  fail(path, "provider object needs \"table\" or \"num\"");
}

PolynomialSequence sequence_at(const json& value, const std::string& path) {
  if (!value.is_array() || value.empty()) fail(path, "expected a nonempty array of coefficient providers");
  std::vector<CoefficientProvider> coeffs;
  for (std::size_t s = 0; s < value.size(); ++s) {
    coeffs.push_back(provider_at(value[s], path + "[" + std::to_string(s) + "]"));
  }
  return PolynomialSequence(std::move(coeffs));
}

SchurParams schur_at(const json& doc) {
  return {provider_at(field(doc, "a", "$"), "$.a"), provider_at(field(doc, "b", "$"), "$.b"),
          provider_at(field(doc, "c", "$"), "$.c")};
}

UlasParams ulas_at(const json& doc) {
  UlasParams p;
  const json& shape = field(doc, "A", "$");
  if (!shape.is_array() || shape.size() != 4) fail("$.A", "expected [i, j, k, l]");
  p.shape = {size_at(shape[0], "$.A[0]"), size_at(shape[1], "$.A[1]"), size_at(shape[2], "$.A[2]"),
             size_at(shape[3], "$.A[3]")};
  p.r0 = polynomial_at(field(doc, "r0", "$"), "$.r0");
  p.r1 = polynomial_at(field(doc, "r1", "$"), "$.r1");
  p.f = sequence_at(field(doc, "f", "$"), "$.f");
  p.v = provider_at(field(doc, "v", "$"), "$.v");
  const std::string regime = doc.value("regime", std::string("strict"));
  if (regime == "strict") {
    p.regime = Regime::Strict;
  } else if (regime == "relaxed") {
    p.regime = Regime::Relaxed;
  } else {
    fail("$.regime", "expected \"strict\" or \"relaxed\"");
  }
  return p;
}

TurajParams turaj_at(const json& doc) {
  TurajParams p;
  p.d = size_at(field(doc, "d", "$"), "$.d");
  p.m = static_cast<unsigned>(size_at(field(doc, "m", "$"), "$.m"));
  p.k = size_at(field(doc, "k", "$"), "$.k");
  p.l = size_at(field(doc, "l", "$"), "$.l");
  const json& initial = field(doc, "initial", "$");
  if (!initial.is_array()) fail("$.initial", "expected an array of coefficient arrays");
  for (std::size_t s = 0; s < initial.size(); ++s) {
    p.initial.push_back(polynomial_at(initial[s], "$.initial[" + std::to_string(s) + "]"));
  }
  p.g = sequence_at(field(doc, "g", "$"), "$.g");
  p.v = provider_at(field(doc, "v", "$"), "$.v");
  if (doc.contains("middle")) {
    const json& middle = doc["middle"];
    if (!middle.is_array()) fail("$.middle", "expected an array");
    for (std::size_t s = 0; s < middle.size(); ++s) {
      const std::string path = "$.middle[" + std::to_string(s) + "]";
      MiddleTerm term;
      const json& alpha = field(middle[s], "alpha", path);
      if (!alpha.is_array()) fail(path + ".alpha", "expected an array");
      for (std::size_t a = 0; a < alpha.size(); ++a) {
        term.alpha.push_back(static_cast<unsigned>(size_at(alpha[a], path + ".alpha[" + std::to_string(a) + "]")));
      }
      term.t = sequence_at(field(middle[s], "t", path), path + ".t");
      p.middle.push_back(std::move(term));
    }
  }
  return p;
}

const std::map<std::string, FamilyKind>& kind_table() {
  static const std::map<std::string, FamilyKind> table = {
      {"schur", FamilyKind::Schur},
      {"ulas", FamilyKind::Ulas},
      {"turaj", FamilyKind::Turaj},
      {"central-binomial", FamilyKind::CentralBinomial},
      {"example-5.3", FamilyKind::CentralBinomial},
      {"shifted-hypergeometric", FamilyKind::ShiftedHypergeom},
      {"example-5.4", FamilyKind::ShiftedHypergeom},
      {"mahlburg-ono", FamilyKind::MahlburgOno},
  };
  return table;
}

}  // namespace

std::string kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Schur: return "schur";
    case FamilyKind::Ulas: return "ulas";
    case FamilyKind::Turaj: return "turaj";
    case FamilyKind::CentralBinomial: return "central-binomial";
    case FamilyKind::ShiftedHypergeom: return "shifted-hypergeometric";
    case FamilyKind::MahlburgOno: return "mahlburg-ono";
  }
  return "unknown";
}

FamilySpec parse_family_spec(const json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  const json& family = field(doc, "family", "$");
  if (!family.is_string()) fail("$.family", "expected a string");
  const auto it = kind_table().find(family.get<std::string>());
  if (it == kind_table().end()) fail("$.family", "unknown family \"" + family.get<std::string>() + "\"");

  FamilySpec spec;
  spec.kind = it->second;
  spec.id = doc.contains("id") && doc["id"].is_string() ? doc["id"].get<std::string>() : kind_name(spec.kind);
  if (doc.contains("n_max")) {
    spec.n_max = integer_at(doc["n_max"], "$.n_max");
    if (spec.n_max < 0) fail("$.n_max", "expected a nonnegative integer");
  }
  if (doc.contains("c_values")) {
    const json& cs = doc["c_values"];
    if (!cs.is_array()) fail("$.c_values", "expected an array of rational strings");
    for (std::size_t s = 0; s < cs.size(); ++s) {
      spec.c_values.push_back(rational_at(cs[s], "$.c_values[" + std::to_string(s) + "]"));
    }
  }

  try {
    switch (spec.kind) {
      case FamilyKind::Schur:
        spec.params = schur_at(doc);
        break;
      case FamilyKind::Ulas: {
        UlasParams p = ulas_at(doc);
        validate(p);
        spec.params = std::move(p);
        break;
      }
      case FamilyKind::Turaj: {
        TurajParams p = turaj_at(doc);
        validate(p);
        spec.params = std::move(p);
        break;
      }
      case FamilyKind::CentralBinomial:
        spec.params = std::monostate{};
        break;
      case FamilyKind::ShiftedHypergeom: {
        const ShiftedHypergeom p{rational_at(field(doc, "alpha", "$"), "$.alpha"),
                                 rational_at(field(doc, "beta", "$"), "$.beta"),
                                 rational_at(field(doc, "gamma", "$"), "$.gamma")};
        shifted_hypergeom::validate(p);
        spec.params = p;
        break;
      }
      case FamilyKind::MahlburgOno:
        spec.params = mo_family(static_cast<int>(integer_at(field(doc, "r", "$"), "$.r")));
        break;
    }
  } catch (const InvalidParamsError& e) {
    fail("$", e.what());
  } catch (const ConditionViolatedError& e) {
    fail("$", e.what());
  }
  return spec;
}

FamilySpec load_family_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path.string() + ": cannot open");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
  return parse_family_spec(doc);
}

std::vector<std::string> preset_names() {
  return {"schur", "central-binomial", "shifted-hypergeometric", "mahlburg-ono", "turaj-cubic"};
}

FamilySpec preset_spec(const std::string& name) {
  const json cs = {"0", "1", "-1", "1/2", "-3"};
  if (name == "schur") return parse_family_spec({{"family", "schur"}, {"a", "1"}, {"b", "0"}, {"c", "1"}, {"n_max", 10}});
  if (name == "central-binomial" || name == "example-5.3") {
    return parse_family_spec({{"family", "central-binomial"}, {"n_max", 8}, {"c_values", cs}});
  }
  if (name == "shifted-hypergeometric" || name == "example-5.4") {
    return parse_family_spec({{"family", "shifted-hypergeometric"},
                              {"alpha", "1/2"},
                              {"beta", "-1"},
                              {"gamma", "1/3"},
                              {"n_max", 5},
                              {"c_values", cs}});
  }
  if (name == "mahlburg-ono") return parse_family_spec({{"family", "mahlburg-ono"}, {"r", 0}, {"n_max", 8}, {"c_values", cs}});
  if (name == "turaj-cubic") {
    return parse_family_spec({{"family", "turaj"},
                              {"d", 1},
                              {"m", 2},
                              {"k", 1},
                              {"l", 0},
                              {"initial", {{"1"}, {"0", "1"}}},
                              {"g", {"0", "1"}},
                              {"v", "1"},
                              {"n_max", 4}});
  }
  throw SpecError("unknown preset \"" + name + "\"");
}

json to_json(const Rational& value) { return to_string(value); }

json to_json(const Polynomial& p) { return p.to_strings(); }

// ---------------------------------------------------------------------------

FamilyInstance::FamilyInstance(FamilySpec spec) : spec_(std::move(spec)) {
  switch (spec_.kind) {
    case FamilyKind::Schur:
      family_ = std::make_unique<SchurFamily>(std::get<SchurParams>(spec_.params));
      break;
    case FamilyKind::Ulas:
      family_ = std::make_unique<UlasFamily>(std::get<UlasParams>(spec_.params));
      break;
    case FamilyKind::Turaj:
      family_ = std::make_unique<TurajFamily>(std::get<TurajParams>(spec_.params));
      break;
    case FamilyKind::CentralBinomial:
      family_ = std::make_unique<UlasFamily>(central_binomial::ulas_params());
      break;
    case FamilyKind::ShiftedHypergeom:
      family_ = std::make_unique<UlasFamily>(shifted_hypergeom::ulas_params(std::get<ShiftedHypergeom>(spec_.params)));
      break;
    case FamilyKind::MahlburgOno:
      family_ = std::make_unique<UlasFamily>(mo_ulas_params(std::get<MOFamily>(spec_.params)));
      break;
  }
}

const Polynomial& FamilyInstance::generate(long n) {
  if (n < 0) throw std::out_of_range("n must be nonnegative");
  return family_->at(n);
}

Rational FamilyInstance::resultant_oracle(long n) {
  if (n < 1) throw std::out_of_range("resultant needs n >= 1");
  return resultant(family_->at(n), family_->at(n - 1));
}

Rational FamilyInstance::resultant_formula(long n) {
  if (n < 1) throw std::out_of_range("resultant needs n >= 1");
  switch (spec_.kind) {
    case FamilyKind::Schur:
      return schur_resultant(std::get<SchurParams>(spec_.params), n);
    case FamilyKind::Turaj: {
      auto& fam = static_cast<TurajFamily&>(*family_);
      if (n < static_cast<long>(fam.params().d)) throw std::out_of_range("Turaj closed form needs n >= d");
      return turaj_resultant(fam, n);
    }
    case FamilyKind::CentralBinomial:
      return central_binomial::resultant_closed(n);
    case FamilyKind::ShiftedHypergeom: {
      const auto& p = std::get<ShiftedHypergeom>(spec_.params);
      return shifted_hypergeom::resultant_closed(p, n, resultant_oracle(1));
    }
    case FamilyKind::Ulas:
    case FamilyKind::MahlburgOno:
      return ulas_resultant(static_cast<UlasFamily&>(*family_), n, UlasLine::Second);
  }
  throw std::logic_error("unreachable");
}

bool FamilyInstance::has_disc_formula() const {
  return spec_.kind == FamilyKind::CentralBinomial || spec_.kind == FamilyKind::ShiftedHypergeom ||
         spec_.kind == FamilyKind::MahlburgOno;
}

Rational FamilyInstance::disc_oracle(long n, const Rational& c) {
  if (n < 1) throw std::out_of_range("discriminant needs n >= 1");
  return discriminant(gen_quasi(*family_, n, c));
}

Rational FamilyInstance::disc_generic(long n, const Rational& c) {
  auto& fam = static_cast<UlasFamily&>(*family_);
  switch (spec_.kind) {
    case FamilyKind::CentralBinomial:
      return quasi_discriminant(fam, central_binomial::diff_relation(), n, c);
    case FamilyKind::ShiftedHypergeom:
      return quasi_discriminant(fam, shifted_hypergeom::diff_relation(std::get<ShiftedHypergeom>(spec_.params)), n, c);
    case FamilyKind::MahlburgOno:
      return quasi_discriminant(fam, mo_diff_relation(std::get<MOFamily>(spec_.params)), n, c);
    default:
      throw SpecError("family \"" + kind_name(spec_.kind) + "\" has no differential relation");
  }
}

Rational FamilyInstance::disc_formula(long n, const Rational& c) {
  if (n < 1) throw std::out_of_range("discriminant needs n >= 1");
  switch (spec_.kind) {
    case FamilyKind::CentralBinomial:
      if (n >= 2) return central_binomial::discriminant_closed(n, c);
      break;
    case FamilyKind::ShiftedHypergeom:
      if (n >= 2) {
        return shifted_hypergeom::discriminant_closed(std::get<ShiftedHypergeom>(spec_.params), n, c,
                                                      resultant_oracle(1));
      }
      break;
    case FamilyKind::MahlburgOno:
      if (c == 0) return mahlburg_ono_disc(std::get<MOFamily>(spec_.params), n);
      break;
    default:
      break;
  }
  return disc_generic(n, c);
}

}  // namespace quasidisc

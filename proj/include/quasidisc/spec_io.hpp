#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quasidisc/example_families.hpp"
#include "quasidisc/families.hpp"
#include "quasidisc/polynomial.hpp"
#include "quasidisc/rational.hpp"

namespace quasidisc {

enum class FamilyKind { Schur, Ulas, Turaj, CentralBinomial, ShiftedHypergeom, MahlburgOno };

/// Canonical spelling used in documents and reports.
std::string kind_name(FamilyKind kind);

struct FamilySpec {
  FamilyKind kind = FamilyKind::Schur;
  std::string id;
  std::variant<SchurParams, UlasParams, TurajParams, std::monostate, ShiftedHypergeom, MOFamily> params;
  long n_max = 6;
  std::vector<Rational> c_values;
};

/// Throws SpecError with a field path on any malformed or invalid field.
FamilySpec parse_family_spec(const nlohmann::json& doc);
FamilySpec load_family_spec(const std::filesystem::path& path);

/// Built-in specs: "schur", "central-binomial", "shifted-hypergeometric",
/// "mahlburg-ono", "turaj-cubic". Throws SpecError for an unknown name.
FamilySpec preset_spec(const std::string& name);
std::vector<std::string> preset_names();

nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const Polynomial& p);

/// A generated family plus the closed forms that apply to it.
class FamilyInstance {
 public:
  explicit FamilyInstance(FamilySpec spec);

  [[nodiscard]] const FamilySpec& spec() const { return spec_; }
  const Polynomial& generate(long n);

  /// Closed-form Res(r_n, r_{n-1}); n = 1 (n = d for Turaj) is the oracle value.
  Rational resultant_formula(long n);
  Rational resultant_oracle(long n);

  /// True when the spec carries a differential relation.
  [[nodiscard]] bool has_disc_formula() const;
  /// Closed-form disc(r_n + c r_{n-1}). Uses the family's own display where
  /// one exists (central-binomial, shifted-hypergeometric, mahlburg-ono at
  /// c = 0) and the generic differential-relation formula otherwise.
  Rational disc_formula(long n, const Rational& c);
  /// The generic formula through the differential relation.
  Rational disc_generic(long n, const Rational& c);
  Rational disc_oracle(long n, const Rational& c);

 private:
  FamilySpec spec_;
  std::unique_ptr<Sequence> family_;
};

}  // namespace quasidisc

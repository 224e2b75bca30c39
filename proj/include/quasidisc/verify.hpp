#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quasidisc/families.hpp"
#include "quasidisc/rational.hpp"

namespace quasidisc {

enum class Suite { All, Ulas, Turaj, Quasi, Hypergeom };

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);
std::string suite_name(Suite suite);

/// One comparison of a closed form against an independent computation.
struct VerificationCase {
  std::string family;    ///< family id, e.g. "central-binomial" or "ulas-fuzz-017"
  std::string check;     ///< which closed form or identity was evaluated
  long n = 0;
  std::optional<Rational> c;
  std::string quantity;  ///< resultant | discriminant | degree | leading | constant | identity | parity
  nlohmann::json formula_value;  ///< "p/q", coefficient array, or null when skipped
  nlohmann::json oracle_value;
  bool equal = false;
  std::optional<std::string> skipped_reason;
  std::optional<std::string> error;  ///< unexpected exception; counts as a failure
  double wall_time = 0.0;

  [[nodiscard]] bool skipped() const { return skipped_reason.has_value() && !error; }
  [[nodiscard]] bool failed() const { return !skipped() && !equal; }
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerificationCase> cases;

  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t failed() const;
  [[nodiscard]] std::size_t skipped() const;
  [[nodiscard]] nlohmann::json to_json() const;
  /// 0 when every evaluated case agrees, 4 on any mismatch, 5 when every case
  /// was skipped.
  [[nodiscard]] int exit_code() const;
};

/// Runs the verification matrix for a suite. Identical (suite, seed) gives an
/// identical report apart from wall_time.
VerificationReport run_verification(Suite suite, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Seeded fuzz generators. Integer coefficients lie in [-5, 5]; draws violating
// the family's assumptions, or whose generation fails up to the tested range,
// are rejected and redrawn.

/// mt19937_64 with a fixed reduction, so draws do not depend on the standard
/// library's distribution implementations.
class FuzzRng {
 public:
  explicit FuzzRng(std::uint64_t seed) : engine_(seed) {}
  /// Integer in [lo, hi].
  long draw(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  long nonzero(long lo, long hi);
  bool coin() { return draw(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Valid Ulas family whose members r_0..r_{n_max} generate without a degree drop.
UlasParams random_ulas_params(FuzzRng& rng, Regime regime, long n_max);

/// Valid Turaj family with d in {1,2}, m in {1,2,3}. With middle terms k >= 2.
/// Generation succeeds for every n <= d+3 whose predicted degree is at most
/// degree_cap.
TurajParams random_turaj_params(FuzzRng& rng, bool with_middle, long degree_cap);

}  // namespace quasidisc

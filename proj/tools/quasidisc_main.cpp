// quasidisc: generate recurrence families and check resultant/discriminant
// closed forms against the Sylvester-matrix oracle.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "quasidisc/errors.hpp"
#include "quasidisc/spec_io.hpp"
#include "quasidisc/verify.hpp"

namespace {

using namespace quasidisc;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 2, kGeneration = 3, kMismatch = 4, kSkipped = 5 };

struct SpecSource {
  std::string file;
  std::string preset;
};

void add_spec_options(CLI::App* cmd, SpecSource& src) {
  auto* file = cmd->add_option("spec", src.file, "family spec (JSON)");
  auto* preset = cmd->add_option("--preset", src.preset, "built-in family instead of a spec file");
  file->excludes(preset);
  preset->excludes(file);
}

FamilySpec load(const SpecSource& src) {
  if (!src.preset.empty()) return preset_spec(src.preset);
  if (src.file.empty()) throw SpecError("give a spec file or --preset");
  return load_family_spec(src.file);
}

void check_n(const FamilySpec& spec, long n, long lowest) {
  if (n < lowest) throw SpecError("n must be at least " + std::to_string(lowest));
  if (n > spec.n_max) throw SpecError("n = " + std::to_string(n) + " exceeds n_max = " + std::to_string(spec.n_max));
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int cmd_gen(const SpecSource& src, long n) {
  FamilySpec spec = load(src);
  check_n(spec, n, 0);
  FamilyInstance fam(std::move(spec));
  try {
    emit(to_json(fam.generate(n)));
  } catch (const Error& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kGeneration;
  }
  return kOk;
}

/// Runs the requested methods and prints {"formula", "oracle", "equal"}.
template <class Formula, class Oracle>
int report_pair(const std::string& method, Formula formula, Oracle oracle, json out) {
  std::optional<Rational> f;
  std::optional<Rational> o;
  try {
    if (method != "oracle") {
      try {
        f = formula();
      } catch (const HypothesisViolatedError& e) {
        out["skipped_reason"] = e.what();
      } catch (const DegenerateBError& e) {
        out["skipped_reason"] = e.what();
      } catch (const ConditionViolatedError& e) {
        out["skipped_reason"] = e.what();
      }
    }
    if (method != "formula") o = oracle();
  } catch (const DegreeDroppedError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kGeneration;
  } catch (const InvalidParamsError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kGeneration;
  }
  if (f) out["formula"] = to_string(*f);
  if (o) out["oracle"] = to_string(*o);
  if (f && o) out["equal"] = *f == *o;
  emit(out);
  if (out.contains("skipped_reason")) return kSkipped;
  if (f && o && *f != *o) return kMismatch;
  return kOk;
}

int cmd_resultant(const SpecSource& src, long n, const std::string& method) {
  FamilySpec spec = load(src);
  check_n(spec, n, 1);
  json out = {{"family", spec.id}, {"n", n}, {"quantity", "resultant"}};
  FamilyInstance fam(std::move(spec));
  const auto& s = fam.spec();
  const long first = s.kind == FamilyKind::Turaj ? static_cast<long>(std::get<TurajParams>(s.params).d) + 1 : 2;
  if (method != "oracle" && n < first && s.kind != FamilyKind::Schur) {
    out["note"] = "closed form starts at n = " + std::to_string(first) + "; value is the oracle resultant";
  }
  return report_pair(
      method, [&] { return fam.resultant_formula(n); }, [&] { return fam.resultant_oracle(n); }, out);
}

int cmd_disc(const SpecSource& src, long n, const std::string& c_text, const std::string& method) {
  FamilySpec spec = load(src);
  check_n(spec, n, 1);
  Rational c;
  try {
    c = parse_rational(c_text);
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("--c: ") + e.what());
  }
  FamilyInstance fam(std::move(spec));
  if (method != "oracle" && !fam.has_disc_formula()) {
    throw SpecError("family \"" + fam.spec().id + "\" has no discriminant closed form; use --method oracle");
  }
  json out = {{"family", fam.spec().id}, {"n", n}, {"c", to_string(c)}, {"quantity", "discriminant"}};
  return report_pair(
      method, [&] { return fam.disc_formula(n, c); }, [&] { return fam.disc_oracle(n, c); }, out);
}

int cmd_verify(const std::string& suite_text, std::uint64_t seed, const std::string& out_path) {
  const Suite suite = parse_suite(suite_text);
  const VerificationReport report = run_verification(suite, seed);
  const json doc = report.to_json();
  if (out_path.empty() || out_path == "-") {
    emit(doc);
  } else {
    std::ofstream out(out_path);
    if (!out) throw SpecError(out_path + ": cannot write");
    out << doc.dump(2) << "\n";
  }
  std::cerr << "suite " << report.suite << ": " << report.cases.size() << " cases, " << report.passed()
            << " passed, " << report.failed() << " failed, " << report.skipped() << " skipped\n";
  for (const auto& c : report.cases) {
    if (c.failed()) {
      std::cerr << "MISMATCH " << c.family << " " << c.check << " n=" << c.n
                << (c.c ? " c=" + to_string(*c.c) : std::string()) << (c.error ? " error: " + *c.error : std::string())
                << "\n";
    }
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resultants and discriminants of recurrence-defined polynomial families"};
  app.require_subcommand(1);

  SpecSource src;
  long n = 0;
  std::string method = "both";
  std::string c_text = "0";
  std::string suite;
  std::uint64_t seed = 1;
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "print r_n coefficients, low to high");
  add_spec_options(gen, src);
  gen->add_option("-n,--n", n, "index")->required();

  const auto methods = CLI::IsMember({"formula", "oracle", "both"});
  auto* res = app.add_subcommand("resultant", "Res(r_n, r_{n-1})");
  add_spec_options(res, src);
  res->add_option("-n,--n", n, "index")->required();
  res->add_option("--method", method, "formula | oracle | both")->check(methods);

  auto* disc = app.add_subcommand("disc", "disc(r_n + c r_{n-1})");
  add_spec_options(disc, src);
  disc->add_option("-n,--n", n, "index")->required();
  disc->add_option("--c", c_text, "quasi parameter as \"p/q\"");
  disc->add_option("--method", method, "formula | oracle | both")->check(methods);

  auto* ver = app.add_subcommand("verify", "run the verification matrix");
  ver->add_option("--suite", suite, "all | ulas | turaj | quasi | hypergeom")->required();
  ver->add_option("--seed", seed, "fuzz seed");
  ver->add_option("--out", out_path, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(src, n);
    if (*res) return cmd_resultant(src, n, method);
    if (*disc) return cmd_disc(src, n, c_text, method);
    if (*ver) return cmd_verify(suite, seed, out_path);
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGeneration;
  }
  return kUsage;
}

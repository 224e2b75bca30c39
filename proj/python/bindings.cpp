#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "quasidisc/errors.hpp"
#include "quasidisc/example_families.hpp"
#include "quasidisc/hypergeom.hpp"
#include "quasidisc/resultant.hpp"
#include "quasidisc/spec_io.hpp"
#include "quasidisc/verify.hpp"

namespace py = pybind11;
using namespace quasidisc;

namespace {

// Scalars cross the boundary as fractions.Fraction; anything whose str() parses
// as "p/q" (int, str, Fraction) is accepted on the way in.
Rational to_rational(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

py::object to_fraction(const Rational& value) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(value));
}

Polynomial to_polynomial(const py::sequence& coeffs) {
  std::vector<Rational> out;
  for (const auto& c : coeffs) out.push_back(to_rational(c));
  return Polynomial(std::move(out));
}

py::list to_list(const Polynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_fraction(c));
  return out;
}

py::object json_to_python(const nlohmann::json& doc) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(doc.dump());
}

nlohmann::json python_to_json(const py::object& obj) {
  py::object dumps = py::module_::import("json").attr("dumps");
  return nlohmann::json::parse(dumps(obj).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact resultants and discriminants of recurrence-defined polynomial families";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<SpecError>(m, "SpecError", error);
  py::register_exception<HypothesisViolatedError>(m, "HypothesisViolatedError", error);
  py::register_exception<DegenerateBError>(m, "DegenerateBError", error);
  py::register_exception<DegreeDroppedError>(m, "DegreeDroppedError", error);
  py::register_exception<InvalidParamsError>(m, "InvalidParamsError", error);
  py::register_exception<BothZeroError>(m, "BothZeroError", error);
  py::register_exception<DegreeTooLowError>(m, "DegreeTooLowError", error);

  m.def(
      "resultant", [](const py::sequence& f, const py::sequence& g) {
        return to_fraction(resultant(to_polynomial(f), to_polynomial(g)));
      },
      py::arg("f"), py::arg("g"), "Res(f, g) for coefficient lists (low to high).");
  m.def(
      "discriminant", [](const py::sequence& f) { return to_fraction(discriminant(to_polynomial(f))); },
      py::arg("f"));
  m.def(
      "product_over_roots", [](const py::sequence& f, const py::sequence& g) {
        return to_fraction(product_over_roots(to_polynomial(f), to_polynomial(g)));
      },
      py::arg("f"), py::arg("g"), "prod g(y) over the roots y of f, with multiplicity.");
  m.def(
      "determinant", [](const std::vector<py::sequence>& rows) {
        Matrix mat(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (py::len(rows[r]) != rows.size()) throw std::invalid_argument("matrix must be square");
          for (std::size_t c = 0; c < rows.size(); ++c) mat(r, c) = to_rational(rows[r][c]);
        }
        return to_fraction(determinant_fraction_free(mat));
      },
      py::arg("rows"));

  m.def(
      "pochhammer", [](const py::object& alpha, unsigned long k) { return to_fraction(pochhammer(to_rational(alpha), k)); },
      py::arg("alpha"), py::arg("k"));
  m.def(
      "hyp2f1_poly", [](const py::object& a, const py::object& b, const py::object& c) {
        return to_list(hyp2f1_poly({to_rational(a), to_rational(b), to_rational(c)}));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), "Coefficients of a terminating 2F1[a, b; c; x].");
  m.def(
      "v_r_polynomial", [](int r, long n) { return to_list(v_r_polynomial(mo_family(r), n)); }, py::arg("r"),
      py::arg("n"));
  m.def(
      "mahlburg_ono_disc", [](int r, long n) { return to_fraction(mahlburg_ono_disc(mo_family(r), n)); },
      py::arg("r"), py::arg("n"));

  py::class_<FamilyInstance>(m, "Family")
      .def(py::init([](const py::object& spec) {
             if (py::isinstance<py::str>(spec)) return FamilyInstance(preset_spec(spec.cast<std::string>()));
             return FamilyInstance(parse_family_spec(python_to_json(spec)));
           }),
           py::arg("spec"), "Build from a spec dict or a preset name.")
      .def_property_readonly("id", [](const FamilyInstance& f) { return f.spec().id; })
      .def_property_readonly("kind", [](const FamilyInstance& f) { return kind_name(f.spec().kind); })
      .def_property_readonly("n_max", [](const FamilyInstance& f) { return f.spec().n_max; })
      .def_property_readonly("c_values",
                             [](const FamilyInstance& f) {
                               py::list out;
                               for (const auto& c : f.spec().c_values) out.append(to_fraction(c));
                               return out;
                             })
      .def("generate", [](FamilyInstance& f, long n) { return to_list(f.generate(n)); }, py::arg("n"))
      .def("resultant_formula", [](FamilyInstance& f, long n) { return to_fraction(f.resultant_formula(n)); },
           py::arg("n"))
      .def("resultant_oracle", [](FamilyInstance& f, long n) { return to_fraction(f.resultant_oracle(n)); },
           py::arg("n"))
      .def_property_readonly("has_disc_formula", &FamilyInstance::has_disc_formula)
      .def(
          "disc_formula",
          [](FamilyInstance& f, long n, const py::object& c) { return to_fraction(f.disc_formula(n, to_rational(c))); },
          py::arg("n"), py::arg("c") = 0)
      .def(
          "disc_oracle",
          [](FamilyInstance& f, long n, const py::object& c) { return to_fraction(f.disc_oracle(n, to_rational(c))); },
          py::arg("n"), py::arg("c") = 0);

  m.def("presets", &preset_names);
  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed) {
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = run_verification(parse_suite(suite), seed);
        }
        return json_to_python(report.to_json());
      },
      py::arg("suite") = "all", py::arg("seed") = 1, "Run a verification suite and return the report as a dict.");
}

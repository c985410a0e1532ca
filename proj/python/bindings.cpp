// Python bindings for the simplecubic library. Arbitrary precision integers
// cross the boundary as Python ints, rationals as fractions.Fraction, and
// analysis records as plain dicts (the JSON form).

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "simplecubic/scan.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (PyLong_Check(src.ptr())) {
      value = mpq_class(mpz_class(py::str(src).cast<std::string>()));
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) return false;
    value = mpq_class(mpz_class(py::str(src.attr("numerator")).cast<std::string>()),
                      mpz_class(py::str(src.attr("denominator")).cast<std::string>()));
    value.canonicalize();
    return true;
  }

  static handle cast(const mpq_class& v, return_value_policy policy, handle parent) {
    auto fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(
        type_caster<mpz_class>::cast(v.get_num(), policy, parent));
    py::object den = py::reinterpret_steal<py::object>(
        type_caster<mpz_class>::cast(v.get_den(), policy, parent));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace simplecubic;

py::object json_to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::list factor_pairs(const Factorization& f) {
  py::list out;
  for (const auto& pe : f.factors()) out.append(py::make_tuple(pe.prime, pe.exponent));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simplest cubic fields: conductors, monogenity, power integral bases";

  py::register_exception<FactorizationError>(m, "FactorizationError");
  py::register_exception<InternalError>(m, "InternalError");

  // arith
  m.def("vp", &vp, py::arg("n"), py::arg("p"));
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("factor", [](const Integer& n) { return factor_pairs(factor(n)); }, py::arg("n"),
        "Prime factorization as a list of (prime, exponent) pairs.");
  m.def("cube_root_exact", &cube_root_exact, py::arg("n"));

  // field
  py::class_<FieldElement>(m, "FieldElement")
      .def(py::init([](const Integer& t, const Integer& c0, const Integer& c1, const Integer& c2,
                       const Integer& den) { return FieldElement(t, {c0, c1, c2}, den); }),
           py::arg("t"), py::arg("c0"), py::arg("c1") = Integer(0), py::arg("c2") = Integer(0),
           py::arg("den") = Integer(1))
      .def_static("theta", &FieldElement::theta, py::arg("t"))
      .def_property_readonly("t", &FieldElement::t)
      .def_property_readonly("num", [](const FieldElement& x) {
        return py::make_tuple(x.num()[0], x.num()[1], x.num()[2]);
      })
      .def_property_readonly("den", &FieldElement::den)
      .def("inverse", &FieldElement::inverse)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", &FieldElement::to_string);
  m.def("reduce_param", &reduce_param, py::arg("t"));
  m.def("sigma", py::overload_cast<const FieldElement&>(&sigma), py::arg("x"));
  m.def("trace", &trace, py::arg("x"));
  m.def("norm", &norm, py::arg("x"));
  m.def("minimal_polynomial", [](const FieldElement& x) { return minimal_polynomial(x).coefficients(); },
        py::arg("x"), "Coefficients of the monic minimal polynomial, lowest degree first.");
  m.def("is_integral", &is_integral, py::arg("x"));
  m.def("element_discriminant", &element_discriminant, py::arg("x"));

  // conductor
  py::enum_<ThreeAdicCase>(m, "ThreeAdicCase")
      .value("V3_ZERO", ThreeAdicCase::kZero)
      .value("V3_TWO", ThreeAdicCase::kTwo)
      .value("V3_THREE_RAMIFIED", ThreeAdicCase::kThreeRamified)
      .value("V3_THREE_UNRAMIFIED", ThreeAdicCase::kThreeUnramified);
  py::class_<ConductorData>(m, "ConductorData")
      .def_readonly("t", &ConductorData::t)
      .def_property_readonly("delta", [](const ConductorData& d) { return d.delta.value(); })
      .def_property_readonly("delta_factors", [](const ConductorData& d) { return factor_pairs(d.delta); })
      .def_property_readonly("conductor", [](const ConductorData& d) { return d.conductor.value(); })
      .def_property_readonly("conductor_factors",
                             [](const ConductorData& d) { return factor_pairs(d.conductor); })
      .def_readonly("three_case", &ConductorData::three_case);
  m.def("delta", &delta, py::arg("t"));
  m.def("three_case", &three_case, py::arg("t"));
  m.def("conductor", &conductor, py::arg("t"));

  // monogenity
  py::enum_<CaseLabel>(m, "CaseLabel")
      .value("A", CaseLabel::kA)
      .value("B", CaseLabel::kB)
      .value("C", CaseLabel::kC);
  py::class_<PibCertificate>(m, "PibCertificate")
      .def_readonly("witness_t", &PibCertificate::witness_t)
      .def_readonly("conductor", &PibCertificate::conductor)
      .def_readonly("m", &PibCertificate::m)
      .def_readonly("a", &PibCertificate::a)
      .def_readonly("gamma", &PibCertificate::gamma)
      .def_property_readonly("min_poly",
                             [](const PibCertificate& c) { return c.min_poly.coefficients(); })
      .def_readonly("disc", &PibCertificate::disc);
  py::class_<MonogenityVerdict>(m, "MonogenityVerdict")
      .def_readonly("t", &MonogenityVerdict::t)
      .def_readonly("parameter_monogenic", &MonogenityVerdict::parameter_monogenic)
      .def_readonly("field_monogenic", &MonogenityVerdict::field_monogenic)
      .def_readonly("case_label", &MonogenityVerdict::case_label)
      .def_readonly("z_theta_maximal", &MonogenityVerdict::z_theta_maximal)
      .def_readonly("ck_principal", &MonogenityVerdict::ck_principal)
      .def_property_readonly("coincidence_class",
                             [](const MonogenityVerdict& v) { return v.coincidence.members; })
      .def_readonly("witness_t", &MonogenityVerdict::witness_t)
      .def_readonly("certificate", &MonogenityVerdict::certificate);
  m.def("coincidence_class", [](const Integer& t) { return coincidence_class(t).members; },
        py::arg("t"));
  m.def("monogenic_param_valuation", py::overload_cast<const Integer&>(&monogenic_param_valuation),
        py::arg("t"));
  m.def("monogenic_param_cube", py::overload_cast<const Integer&>(&monogenic_param_cube),
        py::arg("t"));
  m.def("field_monogenic",
        [](const Integer& t, bool checked) {
          return field_monogenic(t, checked ? DecisionMode::kChecked : DecisionMode::kFast);
        },
        py::arg("t"), py::arg("checked") = true);
  m.def("ck_principal", [](const Integer& t) { return ck_principal(t); }, py::arg("t"));
  m.def("power_integral_basis", &power_integral_basis, py::arg("t"));

  // verify
  py::class_<Check>(m, "Check")
      .def_readonly("name", &Check::name)
      .def_readonly("passed", &Check::passed)
      .def_readonly("detail", &Check::detail);
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_property_readonly("subject", &VerificationReport::subject)
      .def_property_readonly("checks", &VerificationReport::checks)
      .def_property_readonly("overall", &VerificationReport::overall)
      .def("__str__", &VerificationReport::to_string);
  m.def("check_shanks_relations", &check_shanks_relations, py::arg("t"));
  m.def("check_certificate", py::overload_cast<const PibCertificate&>(&check_certificate),
        py::arg("cert"));
  m.def("check_negative", &check_negative, py::arg("t"));
  m.def("reproduce_tables", [] { return reproduce_tables(); });

  // records and scans
  m.def("analyze",
        [](const Integer& t, bool verify) {
          return json_to_python(to_json(analyze(t, {verify, DecisionMode::kChecked})));
        },
        py::arg("t"), py::arg("verify") = false, "Full analysis record of t as a dict.");
  m.def("scan",
        [](const Integer& lo, const Integer& hi, unsigned jobs, bool verify) {
          ScanOptions options;
          options.lo = lo;
          options.hi = hi;
          options.jobs = jobs;
          options.analyze.verify = verify;
          std::vector<AnalysisRecord> records;
          {
            py::gil_scoped_release release;
            records = scan_collect(options);
          }
          py::list out;
          for (const auto& r : records) out.append(json_to_python(to_json(r)));
          return out;
        },
        py::arg("lo"), py::arg("hi"), py::arg("jobs") = 1u, py::arg("verify") = false);
}

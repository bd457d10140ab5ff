#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weave3/invariants.hpp"
#include "weave3/output.hpp"
#include "weave3/shape.hpp"
#include "weave3/verify.hpp"
#include "weave3/weaving.hpp"

namespace py = pybind11;
using namespace weave3;

namespace {

py::object big_to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

BigInt py_to_big(const py::object& o) {
  return BigInt(py::str(o).cast<std::string>());
}

py::list row_to_py(const CoeffRow& row) {
  py::list out;
  for (const BigInt& v : row) out.append(big_to_py(v));
  return out;
}

CoeffRow py_to_row(const py::sequence& seq) {
  CoeffRow row;
  for (const auto& item : seq) row.push_back(py_to_big(py::reinterpret_borrow<py::object>(item)));
  return row;
}

py::dict zero_entry_to_py(const ZeroEntry& e) {
  py::dict d;
  d["k"] = e.k;
  d["branch"] = e.branch;
  d["value"] = e.value;
  d["is_real"] = e.is_real;
  return d;
}

}  // namespace

PYBIND11_MODULE(_weave3, mod) {
  mod.doc() = "Exact Alexander/Jones invariants of 3-braid closures and weaving links";

  py::class_<LaurentPoly>(mod, "LaurentPoly")
      .def(py::init([](const py::sequence& coeffs, long offset) {
             return LaurentPoly::from_coeffs(py_to_row(coeffs), offset);
           }),
           py::arg("coeffs"), py::arg("offset") = 0)
      .def_property_readonly("offset", &LaurentPoly::offset)
      .def_property_readonly("coefficients",
                             [](const LaurentPoly& p) { return row_to_py(p.coeffs()); })
      .def("is_zero", &LaurentPoly::is_zero)
      .def("is_palindromic", &LaurentPoly::is_palindromic)
      .def("substitute_negate", &LaurentPoly::substitute_negate)
      .def("canonical_unit_normalize", &LaurentPoly::canonical_unit_normalize)
      .def("exact_div", &LaurentPoly::exact_div)
      .def("shifted", &LaurentPoly::shifted)
      .def("eval_int",
           [](const LaurentPoly& p, const py::object& v) {
             const BigRational r = p.eval_int(py_to_big(v));
             py::object num = big_to_py(numerator(r));
             py::object den = big_to_py(denominator(r));
             if (denominator(r) == 1) return num;
             py::object fraction = py::module_::import("fractions").attr("Fraction");
             return fraction(num, den);
           })
      .def("eval_complex", &LaurentPoly::eval_complex)
      .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
      .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
      .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
      .def("__neg__", [](const LaurentPoly& a) { return -a; })
      .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly(" + p.str() + ")"; })
      .def("str", &LaurentPoly::str, py::arg("variable") = "v");

  py::class_<TrapezoidReport>(mod, "TrapezoidReport")
      .def_readonly("is_positive", &TrapezoidReport::is_positive)
      .def_readonly("is_trapezoidal", &TrapezoidReport::is_trapezoidal)
      .def_readonly("is_log_concave", &TrapezoidReport::is_log_concave)
      .def_property_readonly("plateau_lo",
                             [](const TrapezoidReport& r) -> py::object {
                               if (!r.plateau_lo) return py::none();
                               return py::cast(*r.plateau_lo);
                             })
      .def_property_readonly("plateau_hi",
                             [](const TrapezoidReport& r) -> py::object {
                               if (!r.plateau_hi) return py::none();
                               return py::cast(*r.plateau_hi);
                             })
      .def_property_readonly("r", [](const TrapezoidReport& r) -> py::object {
        if (!r.r) return py::none();
        return py::cast(*r.r);
      });

  // braid words and invariants
  mod.def("alexander", [](const std::string& word) {
    const InvariantValue v = alexander(BraidWord3::parse(word));
    return v.poly;
  }, py::arg("word"), "Canonical Alexander polynomial (variable t) of a braid word closure");
  mod.def("alexander_s", [](const std::string& word) {
    return alexander_s_form(alexander(BraidWord3::parse(word)));
  }, py::arg("word"), "Alexander polynomial in the positive s = -t convention");
  mod.def("jones", [](const std::string& word) {
    const InvariantValue v = jones(BraidWord3::parse(word));
    return py::make_tuple(v.poly, variable_name(v.variable));
  }, py::arg("word"), "Exact Jones polynomial in x with x^2 = t, as (poly, variable)");
  mod.def("jones_t", [](const std::string& word) {
    return jones_in_t(jones(BraidWord3::parse(word)));
  }, py::arg("word"), "Jones polynomial in t; requires even exponent sum");
  mod.def("determinant", [](const std::string& word) {
    return big_to_py(determinant(BraidWord3::parse(word)));
  }, py::arg("word"));
  mod.def("exponent_sum",
          [](const std::string& word) { return BraidWord3::parse(word).exponent_sum(); });

  // combinatorial layer
  mod.def("chebyshev_coeffs", [](long n) { return row_to_py(chebyshev_coeffs(n)); });
  mod.def("chebyshev_series_row", [](long n) { return row_to_py(chebyshev_series_row(n)); });
  mod.def("trinomial", [](long n, long k) { return big_to_py(trinomial(n, k)); });
  mod.def("whitney_c_explicit", [](long n, long k) { return big_to_py(whitney_c_explicit(n, k)); });
  mod.def("whitney_row", [](long n) { return row_to_py(whitney_c_chebyshev_row(n)); });
  mod.def("whitney_row_recurrence",
          [](long n) { return row_to_py(whitney_c_recurrence_row(n)); });
  mod.def("lucas", [](long k) { return big_to_py(lucas(k)); });
  mod.def("lucas_general", [](long m, long k) { return big_to_py(lucas_general(m, k)); });
  mod.def("fibonacci_f_extend",
          [](const py::sequence& prev, const py::sequence& curr, long steps) {
            py::list out;
            for (const CoeffRow& row : fibonacci_f_extend(py_to_row(prev), py_to_row(curr), steps))
              out.append(row_to_py(row));
            return out;
          });

  // weaving closed forms
  mod.def("weaving_word", [](long n, long m) { return weaving_word({n, m}).str(); },
          py::arg("n"), py::arg("m") = 1);
  mod.def("weaving_trace", [](long n, long m) { return weaving_trace({n, m}); }, py::arg("n"),
          py::arg("m") = 1);
  mod.def("jones_weaving", [](long n, long m) { return jones_weaving({n, m}); }, py::arg("n"),
          py::arg("m") = 1);
  mod.def("jones_weaving_coeffs", [](long n) { return row_to_py(jones_weaving_coeffs(n)); });
  mod.def("alexander_weaving",
          [](long n, const std::string& route) {
            if (route == "explicit") return row_to_py(alexander_weaving_explicit(n));
            if (route == "division") return row_to_py(alexander_weaving_division(n));
            if (route == "recurrence") return row_to_py(alexander_weaving_recurrence(n));
            throw Error("unknown route '" + route + "'");
          },
          py::arg("n"), py::arg("route") = "recurrence");
  mod.def("cstar_row", [](long n) { return row_to_py(cstar_row(n)); });
  mod.def("det_weaving", [](long n, long m) { return big_to_py(det_weaving({n, m})); },
          py::arg("n"), py::arg("m") = 1);

  // shape analysis
  mod.def("trapezoid_check", [](const py::sequence& row) { return trapezoid_check(py_to_row(row)); });
  mod.def("zeros_closed_form", [](long n) {
    py::list out;
    for (const ZeroEntry& e : zeros_closed_form(n).entries) out.append(zero_entry_to_py(e));
    return out;
  });
  mod.def("hoste_check", [](long n, double tol) { return hoste_check(zeros_closed_form(n), tol); },
          py::arg("n"), py::arg("tol") = 1e-9);
  mod.def("numeric_roots", [](const LaurentPoly& p, double tol) { return numeric_roots(p, tol); },
          py::arg("p"), py::arg("tol") = 1e-9);
  mod.def("cross_validate_zeros",
          [](long n, double tol) { return cross_validate_zeros(n, tol, nullptr); }, py::arg("n"),
          py::arg("tol") = 1e-9);

  // verification
  mod.def("run_verification",
          [](long max_n, long max_m, const std::vector<std::string>& suites) {
            VerifyOptions options;
            options.max_n = max_n;
            options.max_m = max_m;
            if (!suites.empty()) options.suites = suites;
            py::list out;
            for (const SuiteResult& r : run_verification(options)) {
              py::dict d;
              d["suite"] = r.suite;
              d["passed"] = r.passed;
              d["cases"] = r.cases;
              d["seconds"] = r.seconds;
              d["detail"] = r.detail;
              out.append(d);
            }
            return out;
          },
          py::arg("max_n") = 12, py::arg("max_m") = 3,
          py::arg("suites") = std::vector<std::string>{"all"});
  mod.def("verification_notes", &verification_notes);

  py::register_exception<NonExactDivision>(mod, "NonExactDivisionError");
  py::register_exception<ZeroPolynomial>(mod, "ZeroPolynomialError");
  py::register_exception<ZeroDenominator>(mod, "ZeroDenominatorError");
  py::register_exception<NonUnitPoint>(mod, "NonUnitPointError");
  py::register_exception<ZeroExponent>(mod, "ZeroExponentError");
  py::register_exception<WordParseError>(mod, "WordParseError");
  py::register_exception<InternalMismatch>(mod, "InternalMismatchError");
  py::register_exception<NoConvergence>(mod, "NoConvergenceError");
}

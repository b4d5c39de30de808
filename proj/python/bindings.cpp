#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hodgecalc/bott.hpp"
#include "hodgecalc/constructors.hpp"
#include "hodgecalc/dsl.hpp"
#include "hodgecalc/json_io.hpp"
#include "hodgecalc/spectral.hpp"
#include "hodgecalc/toric.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// arbitrary-precision entries travel as native Python ints, via decimal strings
template <>
struct type_caster<hodgecalc::Int> {
  PYBIND11_TYPE_CASTER(hodgecalc::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* as_string = PyObject_Str(src.ptr());
    if (!as_string) return false;
    const char* text = PyUnicode_AsUTF8(as_string);
    if (!text) {
      Py_DECREF(as_string);
      return false;
    }
    value = hodgecalc::Int(text);
    Py_DECREF(as_string);
    return true;
  }

  static handle cast(const hodgecalc::Int& src, return_value_policy, handle) {
    return PyLong_FromString(src.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace hodgecalc;

std::string format_name(DiamondFormat format) {
  switch (format) {
    case DiamondFormat::Text: return "text";
    case DiamondFormat::Json: return "json";
    case DiamondFormat::Csv: return "csv";
  }
  return "?";
}

DiamondFormat format_from_name(const std::string& name) {
  if (name == "text") return DiamondFormat::Text;
  if (name == "json") return DiamondFormat::Json;
  if (name == "csv") return DiamondFormat::Csv;
  throw ArgumentError("unknown format \"" + name + "\" (text | json | csv)");
}

py::list violations_to_list(const ValidationReport& report) {
  py::list out;
  for (const auto& v : report.violations) {
    py::dict entry;
    entry["kind"] = v.kind;
    entry["p"] = v.p;
    entry["q"] = v.q;
    entry["message"] = v.message;
    out.append(entry);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hodge-grid calculator: blow-up, bundle and product formulas, "
            "spectral-sequence defect bookkeeping, and a toric oracle";
  m.attr("__version__") = "0.1.0";

  py::register_exception<HypothesisError>(m, "HypothesisError");
  py::register_exception<InconsistencyError>(m, "InconsistencyError");
  py::register_exception<InvalidFanError>(m, "InvalidFanError");
  py::register_exception<EvalError>(m, "EvaluationError", PyExc_ValueError);
  static py::exception<Error> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const LexicalError& e) {
      py::set_error(parse_error, e.what());
    } catch (const SyntaxError& e) {
      py::set_error(parse_error, e.what());
    } catch (const SemanticError& e) {
      py::set_error(parse_error, e.what());
    } catch (const RangeError& e) {
      PyErr_SetString(PyExc_IndexError, e.what());
    } catch (const ArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const UnsupportedError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<HodgeGrid>(m, "HodgeGrid")
      .def(py::init<>())
      .def_readonly("dim", &HodgeGrid::dim)
      .def_readonly("char", &HodgeGrid::characteristic)
      .def_readonly("twisted", &HodgeGrid::twisted)
      .def("entry", &HodgeGrid::at, py::arg("p"), py::arg("q"))
      .def("rows", [](const HodgeGrid& g) { return g.h; })
      .def("to_json", [](const HodgeGrid& g) { return grid_to_json(g).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return grid_from_json(nlohmann::json::parse(text));
                  })
      .def(py::self == py::self)
      .def("__repr__", [](const HodgeGrid& g) {
        return "<HodgeGrid dim=" + std::to_string(g.dim) + ">";
      });

  py::class_<DeRhamDims>(m, "DeRhamDims")
      .def(py::init(&make_de_rham), py::arg("dim"), py::arg("b"))
      .def_readonly("dim", &DeRhamDims::dim)
      .def_readonly("b", &DeRhamDims::b)
      .def("to_json", [](const DeRhamDims& b) { return de_rham_to_json(b).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return de_rham_from_json(nlohmann::json::parse(text));
                  })
      .def(py::self == py::self);

  py::class_<HochschildDims>(m, "HochschildDims")
      .def(py::init(&make_hochschild), py::arg("dim"), py::arg("hh"))
      .def_readonly("dim", &HochschildDims::dim)
      .def("at", &HochschildDims::at, py::arg("l"))
      .def("to_json", [](const HochschildDims& hh) { return hochschild_to_json(hh).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    return hochschild_from_json(nlohmann::json::parse(text));
                  })
      .def(py::self == py::self);

  py::class_<DefectVector>(m, "DefectVector")
      .def_readonly("dim", &DefectVector::dim)
      .def_property_readonly(
          "kind", [](const DefectVector& d) { return d.kind == DefectKind::E1 ? "e1" : "e2"; })
      .def("at", &DefectVector::at, py::arg("l"))
      .def("is_zero", &DefectVector::is_zero)
      .def("entries",
           [](const DefectVector& d) {
             py::list out;
             const int lo = d.min_degree();
             for (int l = lo; l <= lo + 2 * d.dim; ++l)
               out.append(py::make_tuple(l, d.at(l)));
             return out;
           })
      .def("to_json", [](const DefectVector& d) { return defect_to_json(d).dump(); })
      .def(py::self == py::self);

  py::class_<Fan>(m, "Fan")
      .def(py::init([](int dim, std::vector<std::vector<long long>> rays,
                       std::vector<std::vector<int>> max_cones) {
             Fan f{dim, std::move(rays), std::move(max_cones)};
             validate_fan(f);
             return f;
           }),
           py::arg("dim"), py::arg("rays"), py::arg("max_cones"))
      .def_readonly("dim", &Fan::dim)
      .def_readonly("rays", &Fan::rays)
      .def_readonly("max_cones", &Fan::max_cones)
      .def("to_json", [](const Fan& f) { return fan_to_json(f).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    Fan f = fan_from_json(nlohmann::json::parse(text));
                    validate_fan(f);
                    return f;
                  })
      .def(py::self == py::self);

  // grid constructors
  m.def("point", &point);
  m.def("projective_space", &projective_space, py::arg("n"));
  m.def("curve", &curve, py::arg("genus"));
  m.def("product", py::overload_cast<const HodgeGrid&, const HodgeGrid&>(&product),
        py::arg("a"), py::arg("b"));
  m.def("projective_bundle", &projective_bundle, py::arg("base"), py::arg("rank"));
  m.def("blow_up",
        py::overload_cast<const HodgeGrid&, const HodgeGrid&, int>(&blow_up), py::arg("x"),
        py::arg("z"), py::arg("codim"));

  // aggregations and validation
  m.def("validate",
        [](const HodgeGrid& g) { return violations_to_list(validate(g)); });
  m.def("total_hodge", &total_hodge, py::arg("grid"), py::arg("l"));
  m.def("anti_diagonal", &anti_diagonal, py::arg("grid"), py::arg("l"));
  m.def("grid_sum", &grid_sum, py::arg("grid"));

  // construction language
  m.def(
      "eval_expr",
      [](const std::string& text, long long characteristic) {
        return eval(parse(text), characteristic);
      },
      py::arg("text"), py::arg("char") = 0);
  m.def("expr_dimension",
        [](const std::string& text) { return dimension(parse(text)); });
  m.def("canonical_expr",
        [](const std::string& text) { return to_string(parse(text)); });
  m.def(
      "print_diamond",
      [](const HodgeGrid& g, const std::string& format) {
        return print_diamond(g, format_from_name(format));
      },
      py::arg("grid"), py::arg("format") = format_name(DiamondFormat::Text));

  // twisted-forms dimensions on projective space
  m.def(
      "bott_h", [](int n, int p, int t, int q) { return bott_h({n, p, t, q}); },
      py::arg("n"), py::arg("p"), py::arg("m"), py::arg("q"));
  m.def(
      "bott_oracle", [](int n, int p, int t, int q) { return bott_oracle({n, p, t, q}); },
      py::arg("n"), py::arg("p"), py::arg("m"), py::arg("q"));
  m.def(
      "bott_vanishing_check",
      [](int n, int bound_m) -> py::object {
        const auto violation = bott_vanishing_check(n, bound_m);
        if (!violation) return py::none();
        return py::make_tuple(violation->query.n, violation->query.p, violation->query.m,
                              violation->query.q, violation->value);
      },
      py::arg("n"), py::arg("bound_m"));

  // spectral bookkeeping
  m.def("de_rham_blowup", &de_rham_blowup, py::arg("bx"), py::arg("bz"), py::arg("codim"));
  m.def("de_rham_blowup_twisted", &de_rham_blowup_twisted, py::arg("bx"), py::arg("bz"),
        py::arg("codim"), py::arg("assuming_q59") = false);
  m.def("e1_defect", &e1_defect, py::arg("grid"), py::arg("b"));
  m.def("e1_defect_blowup", &e1_defect_blowup, py::arg("dx"), py::arg("dz"), py::arg("codim"));
  m.def("hh_blowup", &hh_blowup, py::arg("hx"), py::arg("hz"), py::arg("codim"));
  m.def("hh_projbundle", &hh_projbundle, py::arg("hx"), py::arg("rank"));
  m.def("hh_from_grid", &hh_from_grid, py::arg("grid"));
  m.def("e2_defect", &e2_defect, py::arg("grid"), py::arg("hh"));
  m.def("e2_defect_blowup", &e2_defect_blowup, py::arg("dx"), py::arg("dz"), py::arg("codim"));
  m.def("eo_check", &eo_check, py::arg("grids"), py::arg("m"), py::arg("exponents"));

  // toric oracle
  m.def("point_fan", &point_fan);
  m.def("p1_fan", &p1_fan);
  m.def("p2_fan", &p2_fan);
  m.def("p3_fan", &p3_fan);
  m.def("p1xp1_fan", &p1xp1_fan);
  m.def("f_vector", &f_vector, py::arg("fan"));
  m.def("cones_of_dimension", &cones_of_dimension, py::arg("fan"), py::arg("k"));
  m.def("hodge_from_fan", &hodge_from_fan, py::arg("fan"));
  m.def("betti_from_fan", &betti_from_fan, py::arg("fan"));
  m.def("stellar_subdivision", &stellar_subdivision, py::arg("fan"), py::arg("cone"));
  m.def("product_fan", &product_fan, py::arg("a"), py::arg("b"));
  m.def(
      "oracle_verify",
      [](const Fan& seed, int depth) {
        const SweepResult result = oracle_equivalence_sweep(seed, depth);
        py::dict out;
        out["fans"] = result.fans_visited;
        out["checks"] = result.checks;
        out["ok"] = result.ok;
        if (!result.ok) out["first_failure"] = result.first_failure;
        return out;
      },
      py::arg("seed"), py::arg("depth"));
}

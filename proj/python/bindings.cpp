#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qrefl/catalog.hpp"
#include "qrefl/error.hpp"
#include "qrefl/group.hpp"
#include "qrefl/imprim.hpp"
#include "qrefl/report.hpp"
#include "qrefl/verify.hpp"

namespace py = pybind11;
using namespace qrefl;

namespace {

// Structured results cross the boundary as JSON text; the Python side decodes.
std::string solve_json(const std::string& id) { return to_json(solve(make_entry(id))).dump(); }

std::string report_json(const std::string& id, std::uint64_t seed) {
  VerifyOptions opts;
  opts.seed = seed;
  return to_json(solve_report(make_entry(id), opts)).dump();
}

std::string verify_json(const std::string& table, int lo, int hi, bool parallel) {
  VerifyOptions opts;
  opts.n_lo = lo;
  opts.n_hi = hi;
  opts.parallel = parallel;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : verify_table(table, opts)) out.push_back(to_json(r));
  return out.dump();
}

std::vector<std::string> catalog_ids(const std::string& filter, int lo, int hi) {
  std::optional<Family> family;
  if (filter != "all") {
    family = family_from_string(filter);
    if (!family) throw Error(ErrorKind::BadParameter, "unknown filter '" + filter + "'");
  }
  std::vector<std::string> ids;
  for (const auto& e : catalog(family, {lo, hi, 4})) ids.push_back(e.id.str());
  return ids;
}

}  // namespace

PYBIND11_MODULE(_qrefl, m) {
  m.doc() = "Systems of imprimitivity of rank-two quaternionic reflection groups";

  static py::exception<Error> error(m, "QreflError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<double, double, double, double>(), py::arg("a") = 0.0, py::arg("b") = 0.0, py::arg("c") = 0.0,
           py::arg("d") = 0.0)
      .def_readonly("a", &Quaternion::a)
      .def_readonly("b", &Quaternion::b)
      .def_readonly("c", &Quaternion::c)
      .def_readonly("d", &Quaternion::d)
      .def("conj", &Quaternion::conj)
      .def("norm", &Quaternion::norm)
      .def("inverse", [](const Quaternion& q) { return q.inverse(); })
      .def(py::self * py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__repr__", [](const Quaternion& q) { return "Quaternion(" + format(q) + ")"; })
      .def("__str__", [](const Quaternion& q) { return format(q); });

  m.def("parse_quaternion", &parse_quaternion, py::arg("text"));
  m.def("approx_eq", [](const Quaternion& p, const Quaternion& q, double eps) { return approx_eq(p, q, eps); },
        py::arg("p"), py::arg("q"), py::arg("eps") = 1e-9);

  m.def("group_order", [](const std::string& id) { return closure(make_entry(id).generators).order(); });
  m.def("reflection_count", [](const std::string& id) { return reflections(closure(make_entry(id).generators)).size(); });
  m.def("is_system", [](const std::string& id, const Quaternion& q) { return is_system(make_entry(id).generators, q); },
        py::arg("id"), py::arg("q"));
  m.def("catalog_ids", &catalog_ids, py::arg("filter") = "all", py::arg("n_lo") = 2, py::arg("n_hi") = 12);
  m.def("render_solutions", [](const std::string& id) { return solve(make_entry(id)).render(); });
  m.def("_solve_json", &solve_json);
  m.def("_report_json", &report_json, py::arg("id"), py::arg("seed") = 2024);
  m.def("_verify_json", &verify_json, py::arg("table"), py::arg("n_lo") = 2, py::arg("n_hi") = 12,
        py::arg("parallel") = true);
  m.def("verify_table_names", &verify_table_names);
}

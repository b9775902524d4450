#include <chrono>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octbound/fixture.hpp"
#include "octbound/geometry.hpp"
#include "octbound/interval_geometry.hpp"
#include "octbound/report.hpp"
#include "octbound/score.hpp"
#include "octbound/verifier.hpp"

namespace py = pybind11;
using namespace octbound;

namespace {

using Edges = std::array<double, 6>;

Box6 to_box(const std::array<std::pair<double, double>, 6>& b) {
  Box6 box;
  for (int k = 0; k < 6; ++k) box[k] = Interval(b[k].first, b[k].second);
  return box;
}

std::optional<Interval> enclose(const std::string& fn, const std::array<std::pair<double, double>, 6>& b, int i) {
  const Box6 box = to_box(b);
  if (fn == "gamma") return eval_gamma_I(box);
  if (fn == "vor") return eval_vor_I(box, i);
  if (fn == "delta") return eval_delta_I(box);
  if (fn == "rad") return eval_rad_I(box);
  if (fn == "solid_angle") return eval_solid_angle_I(box, i);
  if (fn == "face_eta") return eval_face_eta_I(box, i);
  throw std::invalid_argument("unknown function '" + fn + "'");
}

std::string verify(const std::string& task, int max_depth, int jobs, std::uint64_t max_cells, double time_limit) {
  Report r;
  const bool is_json = task.find('{') != std::string::npos;
  r.task = is_json ? parse_task(task) : builtin_task(task);
  if (is_json) r.task_json = task;
  r.config.max_depth = max_depth;
  r.config.workers = jobs;
  r.config.max_cells = max_cells;
  r.config.time_limit_seconds = time_limit;
  const auto t0 = std::chrono::steady_clock::now();
  {
    py::gil_scoped_release release;
    r.outcome = branch_and_bound(r.task, r.config);
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report_json(r);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<TaskFormatError>(m, "TaskFormatError", PyExc_ValueError);

  py::class_<Interval>(m, "Interval")
      .def(py::init<double>())
      .def(py::init<double, double>())
      .def_property_readonly("lo", &Interval::lo)
      .def_property_readonly("hi", &Interval::hi)
      .def_property_readonly("width", &Interval::width)
      .def_property_readonly("mid", &Interval::mid)
      .def("contains", &Interval::contains)
      .def("__repr__", [](const Interval& i) { return "Interval(" + to_string(i) + ")"; });

  m.def("delta_oct", &delta_oct);
  m.def("pt", &pt);
  m.def("volume", [](const Edges& y) { return volume(OrderedSimplex(y)); }, py::arg("edges"));
  m.def("circumradius", [](const Edges& y) { return circumradius(OrderedSimplex(y)); }, py::arg("edges"));
  m.def("solid_angle", [](const Edges& y, int i) { return solid_angle(OrderedSimplex(y), i); }, py::arg("edges"),
        py::arg("vertex") = 0);
  m.def("gamma", [](const Edges& y) { return gamma(OrderedSimplex(y)); }, py::arg("edges"));
  m.def("vor", [](const Edges& y, int i) { return vor_analytic(OrderedSimplex(y), i); }, py::arg("edges"),
        py::arg("vertex") = 0);
  m.def("classify", [](const Edges& y) { return to_string(classify(OrderedSimplex(y)).kind); }, py::arg("edges"));
  m.def("enclose", &enclose, py::arg("function"), py::arg("box"), py::arg("index") = 0,
        "Interval enclosure over a box of six (lo, hi) edge ranges; None where undefined.");
  m.def("score_fixture", [](const std::string& name) { return score_star(to_star(builtin_fixture(name))); },
        py::arg("name"));
  m.def("builtin_task_names", &builtin_task_names);
  m.def("tool_version", &tool_version);
  m.def("_verify", &verify);
}

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hexcolor/analysis.hpp"
#include "hexcolor/coloring.hpp"
#include "hexcolor/evaluator.hpp"
#include "hexcolor/io.hpp"
#include "hexcolor/optimizer.hpp"

namespace py = pybind11;
using namespace hexcolor;

namespace {

HexClass class_arg(const std::string& name) { return hex_class_from_string(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal hexagon shapes for k-colorings of hexagonal tilings";

  py::class_<Fraction>(m, "Fraction")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den") = 1)
      .def_readonly("num", &Fraction::num)
      .def_readonly("den", &Fraction::den)
      .def("__float__", &Fraction::value)
      .def("__str__", &Fraction::str)
      .def("__repr__", [](const Fraction& f) { return "Fraction(" + f.str() + ")"; })
      .def(py::self == py::self);

  py::class_<ColorScheme>(m, "ColorScheme")
      .def(py::init([](int k, int g, int h) {
             ColorScheme s{k, g, h};
             require_valid(s);
             return s;
           }),
           py::arg("k"), py::arg("g"), py::arg("h"))
      .def_readonly("k", &ColorScheme::k)
      .def_readonly("g", &ColorScheme::g)
      .def_readonly("h", &ColorScheme::h)
      .def("__repr__", [](const ColorScheme& s) {
        return "ColorScheme(k=" + std::to_string(s.k) + ", g=" + std::to_string(s.g) + ", h=" + std::to_string(s.h) +
               ")";
      });

  py::class_<TripleRepresentation>(m, "Triple")
      .def_property_readonly("t1", [](const TripleRepresentation& t) { return py::make_tuple(t.t1.i, t.t1.j); })
      .def_property_readonly("t2", [](const TripleRepresentation& t) { return py::make_tuple(t.t2.i, t.t2.j); })
      .def_readonly("d01", &TripleRepresentation::d01)
      .def_readonly("d02", &TripleRepresentation::d02)
      .def_readonly("d12", &TripleRepresentation::d12)
      .def_readonly("canonical", &TripleRepresentation::canonical)
      .def("determinant", &TripleRepresentation::determinant);

  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init<>())
      .def_readwrite("starts_per_axis", &SolveOptions::starts_per_axis)
      .def_readwrite("coarse_grid", &SolveOptions::coarse_grid)
      .def_readwrite("value_tol", &SolveOptions::value_tol)
      .def_readwrite("param_tol", &SolveOptions::param_tol)
      .def_readwrite("max_iters", &SolveOptions::max_iters)
      .def_readwrite("enumeration_slack", &SolveOptions::enumeration_slack);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("k", &SolveResult::k)
      .def_property_readonly("class_name", [](const SolveResult& r) { return std::string(to_string(r.class_tag)); })
      .def_readonly("scheme", &SolveResult::scheme)
      .def_property_readonly("gaps", [](const SolveResult& r) { return py::make_tuple(r.gap1, r.gap2); })
      .def_readonly("r", &SolveResult::r)
      .def_readonly("s", &SolveResult::s)
      .def_readonly("d", &SolveResult::d)
      .def_readonly("dsq", &SolveResult::dsq)
      .def_readonly("triple", &SolveResult::triple)
      .def_readonly("dsq_rational", &SolveResult::dsq_rational)
      .def_property_readonly("closed_form", [](const SolveResult& r) { return std::string(to_string(r.closed_form_tag)); })
      .def("summary", [](const SolveResult& r) { return summary_line(r); })
      .def("to_json", [](const SolveResult& r, const SolveOptions& o) { return serialize(make_document(r, o)); },
           py::arg("opts") = SolveOptions{});

  m.def("schemes", &schemes, py::arg("k"), "All index-k colorings (g, h) with g | k and 0 <= h < g.");
  m.def(
      "min_distance",
      [](double gap1, double gap2, const ColorScheme& s) { return min_distance_over_offsets(hexagon_from_gaps(gap1, gap2), s).d; },
      py::arg("gap1"), py::arg("gap2"), py::arg("scheme"));
  m.def(
      "solve", [](int k, const std::string& cls, const SolveOptions& o) { return solve(k, class_arg(cls), o); },
      py::arg("k"), py::arg("cls") = "rectilinear", py::arg("opts") = SolveOptions{});
  m.def(
      "solve_all",
      [](int k, const SolveOptions& o) {
        const SolveAllResult r = solve_all(k, o);
        py::dict per_class;
        for (const auto& c : r.per_class) per_class[py::str(std::string(to_string(c.class_tag)))] = c;
        return py::make_tuple(r.champion, per_class);
      },
      py::arg("k"), py::arg("opts") = SolveOptions{}, "Returns (champion, {class name: result}).");
  m.def("regular_dsq", &regular_dsq, py::arg("k"));
  m.def("regular_d", &regular_d, py::arg("k"));
  m.def("cubic_f", [](std::int64_t k) { return cubic_f(k).dsq; }, py::arg("k"));
  m.def("quartic_dsq", &quartic_dsq, py::arg("k"));
  m.def("classify", [](int k, double dsq) { return std::string(to_string(classify(k, dsq))); }, py::arg("k"),
        py::arg("dsq"));
  m.def("reference_distances", []() { return reference_distances(embedded_reference()); },
        "Distances d(k) of the embedded reference table.");
}

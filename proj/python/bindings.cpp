#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rotpath/error.hpp"
#include "rotpath/greedy.hpp"
#include "rotpath/mirror.hpp"
#include "rotpath/oracle.hpp"
#include "rotpath/random.hpp"
#include "rotpath/render.hpp"
#include "rotpath/report.hpp"
#include "rotpath/rotation.hpp"
#include "rotpath/stack_graph.hpp"

namespace py = pybind11;
using namespace rotpath;

namespace {

using Site = std::tuple<std::size_t, std::size_t>;
using Step = std::tuple<std::string, std::size_t, std::size_t>;

std::vector<Site> sites(const std::vector<LiftSite>& in) {
  std::vector<Site> out;
  for (const auto& s : in) out.emplace_back(s.i, s.j);
  return out;
}

Step step(const RotationStep& s) {
  return {to_string(s.direction), s.site.i, s.site.j};
}

TextFormat format_or_detect(std::string_view text, const std::optional<std::string>& f) {
  return f ? parse_text_format(*f) : detect_text_format(text);
}

// Python ints are unbounded; go through decimal text.
py::int_ to_py(const BigInt& v) {
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(v.str().c_str(), nullptr, 10)));
}

}  // namespace

PYBIND11_MODULE(_rotpath, m) {
  m.doc() = "Rotation distance estimates between binary trees";

  // Messages start with the error code, e.g. "InvalidSite: ...".
  py::register_exception<Error>(m, "RotpathError", PyExc_ValueError);

  py::class_<StackGraph>(m, "StackGraph")
      .def(py::init([](const std::vector<int>& levels) { return validate_stack_graph(levels); }),
           py::arg("levels"))
      .def_static(
          "parse",
          [](const std::string& text, std::optional<std::string> format) {
            return parse_tree_text(text, format_or_detect(text, format));
          },
          py::arg("text"), py::arg("format") = py::none())
      .def_property_readonly("levels",
                             [](const StackGraph& s) {
                               return std::vector<int>(s.levels().begin(), s.levels().end());
                             })
      .def_property_readonly("steps", &StackGraph::step_string)
      .def_property_readonly("leaves", &StackGraph::leaves)
      .def_property_readonly("nodes", &StackGraph::nodes)
      .def("to_text", [](const StackGraph& s, const std::string& f) {
             return print_tree_text(s, parse_text_format(f));
           }, py::arg("format") = "bracket")
      .def("__eq__", [](const StackGraph& a, const StackGraph& b) { return a == b; })
      .def("__lt__", [](const StackGraph& a, const StackGraph& b) { return a < b; })
      .def("__hash__", [](const StackGraph& s) { return StackGraphHash{}(s); })
      .def("__len__", &StackGraph::size)
      .def("__str__", [](const StackGraph& s) { return print_tree_text(s, TextFormat::Bracket); })
      .def("__repr__", [](const StackGraph& s) {
        return "StackGraph('" + print_tree_text(s, TextFormat::Bracket) + "')";
      });

  m.def("enumerate_trees", &enumerate_trees, py::arg("n"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("catalan", [](std::uint64_t n) { return to_py(catalan(n)); }, py::arg("n"));
  m.def("pointwise_leq", &pointwise_leq);
  m.def("right_comb", &right_comb, py::arg("n"));
  m.def("left_comb", &left_comb, py::arg("n"));

  m.def("lift_sites", [](const StackGraph& s) { return sites(lift_sites(s)); });
  m.def("lower_sites", [](const StackGraph& s) { return sites(lower_sites(s)); });
  m.def("apply_lift", [](const StackGraph& s, std::size_t i, std::size_t j) {
    return apply_lift(s, {i, j});
  }, py::arg("s"), py::arg("i"), py::arg("j"));
  m.def("apply_lower", [](const StackGraph& s, std::size_t i, std::size_t j) {
    return apply_lower(s, {i, j});
  }, py::arg("s"), py::arg("i"), py::arg("j"));
  m.def("classify_step", [](const StackGraph& a, const StackGraph& b) -> std::optional<Step> {
    if (auto s = classify_step(a, b)) return step(*s);
    return std::nullopt;
  });
  m.def("mirror", &mirror);

  m.def("greedy_common_lift", [](const StackGraph& a, const StackGraph& b) {
    const auto r = greedy_common_lift(a, b);
    py::dict d;
    d["common_lift"] = r.common_lift;
    d["lifts_from_first"] = sites(r.lifts_from_first);
    d["lifts_from_second"] = sites(r.lifts_from_second);
    d["rotations"] = r.rotations();
    return d;
  });
  m.def("find_rotation_path", [](const StackGraph& a, const StackGraph& b) {
    const auto p = find_rotation_path(a, b);
    std::vector<Step> steps;
    for (const auto& s : p.steps) steps.push_back(step(s));
    const auto report = verify_path(p, a, b);
    py::dict d;
    d["graphs"] = p.graphs;
    d["steps"] = steps;
    d["peak"] = p.peak;
    d["rotations"] = p.rotations();
    d["sorted"] = report.sorted;
    return d;
  });
  m.def("greedy_distance", [](const StackGraph& a, const StackGraph& b) {
    return greedy_estimate(a, b).rotations();
  });

  m.def("exact_distance", &exact_distance, py::arg("a"), py::arg("b"),
        py::arg("cap") = kExactDistanceCap);
  m.def("tamari_leq", &tamari_leq, py::arg("a"), py::arg("b"), py::arg("cap") = kOrderCap);
  m.def("minimal_upper_bounds", &minimal_upper_bounds, py::arg("a"), py::arg("b"),
        py::arg("cap") = kUpperBoundCap);

  m.def("random_stack_graph", &random_stack_graph, py::arg("n"), py::arg("seed"));
  m.def("enumerative_decode", [](std::size_t len, std::size_t weight, const py::int_& index) {
    const auto bits = enumerative_decode(len, weight, BigInt(py::str(index).cast<std::string>().c_str()));
    return std::vector<int>(bits.begin(), bits.end());
  });

  m.def("stack_graph_svg", [](const std::vector<std::tuple<StackGraph, std::string, std::string>>& in) {
    std::vector<StyledGraph> styled;
    for (const auto& [g, label, color] : in) styled.push_back({g, label, color});
    return stack_graph_svg(styled);
  });
  m.def("tree_dot", &tree_dot);
  m.def("hasse_dot", [](std::size_t n) { return hasse_dot(order_diagram(n)); }, py::arg("n"));

  m.def("conjecture_report_json",
        [](std::size_t n_max, std::size_t n_min, std::size_t samples, std::uint64_t seed,
           std::size_t jobs) {
          ReportOptions o;
          o.n_min = n_min;
          o.n_max = n_max;
          o.samples = samples;
          o.seed = seed;
          o.jobs = jobs;
          py::gil_scoped_release release;
          return to_json(conjecture_report(o)).dump();
        },
        py::arg("n_max"), py::arg("n_min") = 1, py::arg("samples") = 200, py::arg("seed") = 1,
        py::arg("jobs") = 1);
}

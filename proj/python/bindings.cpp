#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "simtri/error.hpp"
#include "simtri/graph.hpp"
#include "simtri/io.hpp"
#include "simtri/order.hpp"
#include "simtri/recognizer.hpp"

namespace py = pybind11;
using namespace simtri;

namespace {

// Triangles cross the boundary as (apex, base_left, base_right) tuples.
using TriangleTuple = std::tuple<int, int, int>;

std::vector<TriangleTuple> to_tuples(const TriangleRepresentation& t) {
  std::vector<TriangleTuple> out;
  for (const auto& tri : t.triangles()) out.emplace_back(tri.apex, tri.base_left, tri.base_right);
  return out;
}

TriangleRepresentation from_tuples(const std::vector<TriangleTuple>& tuples) {
  std::vector<Triangle> tris;
  for (const auto& [apex, l, r] : tuples) tris.push_back({apex, l, r});
  return TriangleRepresentation(std::move(tris));
}

std::vector<std::pair<int, int>> intervals_of(const IntervalRepresentation& rep) {
  std::vector<std::pair<int, int>> out;
  for (const auto& iv : rep.intervals()) out.emplace_back(iv.left, iv.right);
  return out;
}

py::dict anticycle_dict(const Anticycle& c) {
  py::dict d;
  d["a"] = c.a;
  d["b"] = c.b;
  return d;
}

}  // namespace

PYBIND11_MODULE(_simtri, m) {
  m.doc() = "Simple-triangle graph and linear-interval order recognition";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &Graph::size)
      .def("__len__", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("add_edge", &Graph::add_edge)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.size()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<PartialOrder>(m, "PartialOrder")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& relations) {
             return make_partial_order(n, relations);
           }),
           py::arg("n"), py::arg("relations") = std::vector<std::pair<Vertex, Vertex>>{},
           "Transitive closure of `relations`; raises Error on a cycle.")
      .def_property_readonly("n", &PartialOrder::size)
      .def("less", &PartialOrder::less)
      .def("relations", &PartialOrder::relations)
      .def("__eq__", [](const PartialOrder& a, const PartialOrder& b) { return a == b; });

  m.def("complement", &complement);
  m.def("parse_graph", [](const std::string& text) { return parse_graph(std::string_view(text)); });
  m.def("parse_order", [](const std::string& text) { return parse_order(std::string_view(text)); });

  m.def(
      "check_apex_ordering",
      [](const Graph& g, const std::vector<Vertex>& ordering) { return check_apex_ordering(g, Ordering(ordering)); },
      py::arg("graph"), py::arg("ordering"));

  m.def(
      "find_apex_obstruction",
      [](const Graph& g, const std::vector<Vertex>& ordering) -> std::optional<std::pair<std::string, std::vector<Vertex>>> {
        const auto w = find_apex_obstruction(g, Ordering(ordering));
        if (!w) return std::nullopt;
        return std::make_pair(std::string(w->pattern), w->vertices);
      },
      py::arg("graph"), py::arg("ordering"), "(pattern name, vertices) or None");

  m.def(
      "recognize",
      [](const Graph& g) -> std::optional<std::pair<std::vector<Vertex>, std::vector<TriangleTuple>>> {
        const auto r = recognize(g);
        if (!r) return std::nullopt;
        return std::make_pair(r->ordering.vector(), to_tuples(r->triangles));
      },
      py::arg("graph"), "(apex ordering, triangles) or None");

  m.def(
      "realize",
      [](const Graph& g, const std::vector<Vertex>& ordering) { return to_tuples(realize(g, Ordering(ordering))); },
      py::arg("graph"), py::arg("ordering"));

  m.def(
      "verify_representation",
      [](const Graph& g, const std::vector<TriangleTuple>& t) { return verify_representation(g, from_tuples(t)); },
      py::arg("graph"), py::arg("triangles"));

  m.def(
      "emit_representation",
      [](const std::vector<TriangleTuple>& t, const std::string& format) {
        if (format != "structured" && format != "svg") throw py::value_error("format must be 'structured' or 'svg'");
        return emit_representation(from_tuples(t),
                                   format == "svg" ? RepresentationFormat::svg : RepresentationFormat::structured);
      },
      py::arg("triangles"), py::arg("format") = "structured");

  m.def(
      "build_interval_representation",
      [](const PartialOrder& order, const std::vector<Vertex>& extension) -> py::object {
        const auto result = build_interval_representation(order, Ordering(extension));
        if (const auto* rep = std::get_if<IntervalRepresentation>(&result)) return py::cast(intervals_of(*rep));
        return anticycle_dict(std::get<Anticycle>(result));
      },
      py::arg("order"), py::arg("extension"),
      "List of (left, right) intervals, or {'a': [...], 'b': [...]} for a 4-anticycle.");

  m.def(
      "recognize_linear_interval_order",
      [](const PartialOrder& order) -> std::optional<std::pair<std::vector<Vertex>, std::vector<std::pair<int, int>>>> {
        const auto w = recognize_linear_interval_order(order);
        if (!w) return std::nullopt;
        return std::make_pair(w->extension.vector(), intervals_of(w->intervals));
      },
      py::arg("order"), "(extension, intervals) or None");
}

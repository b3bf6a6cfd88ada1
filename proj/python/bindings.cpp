#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "minpsc/color_coding.hpp"
#include "minpsc/errors.hpp"
#include "minpsc/generators.hpp"
#include "minpsc/graph.hpp"
#include "minpsc/hardness.hpp"
#include "minpsc/io.hpp"
#include "minpsc/kernel.hpp"
#include "minpsc/solve.hpp"

namespace py = pybind11;

namespace {

using EdgeTuple = std::tuple<minpsc::VertexId, minpsc::VertexId, minpsc::Weight>;

minpsc::Instance make_instance(std::size_t n, const std::vector<EdgeTuple>& edges) {
  std::vector<minpsc::Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v, w] : edges) list.push_back({u, v, w});
  return minpsc::Instance(n, std::move(list));
}

std::vector<EdgeTuple> edge_tuples(const minpsc::Instance& inst, const minpsc::EdgeSet& ids) {
  std::vector<EdgeTuple> out;
  for (minpsc::EdgeId e : ids) {
    const auto& edge = inst.edge(e);
    out.emplace_back(edge.u, edge.v, edge.w);
  }
  return out;
}

py::dict solve_py(const minpsc::Instance& inst, const std::string& algo, std::uint64_t seed,
                  double epsilon, bool deterministic,
                  std::optional<std::vector<minpsc::Weight>> lower_bounds) {
  minpsc::SolveOptions options;
  options.algo = minpsc::parse_algorithm(algo);
  options.seed = seed;
  options.epsilon = epsilon;
  options.deterministic = deterministic;
  options.lower_bounds = std::move(lower_bounds);
  minpsc::SolveReport r;
  {
    py::gil_scoped_release release;
    r = minpsc::solve(inst, options);
  }
  py::dict d;
  d["algo"] = minpsc::algorithm_name(r.used);
  d["total"] = r.solution.total_cost;
  d["edges"] = edge_tuples(inst, r.solution.edges);
  d["per_vertex_cost"] = r.solution.per_vertex_cost;
  d["margin"] = r.margin;
  d["c"] = r.c;
  d["g"] = r.g;
  d["time_ms"] = r.time_ms;
  d["notes"] = r.notes;
  return d;
}

py::dict kernelize_py(const minpsc::Instance& inst) {
  const minpsc::KernelResult k = minpsc::kernelize(inst);
  const auto& s = k.stats;
  py::dict stats;
  stats["n"] = s.n;
  stats["m"] = s.m;
  stats["g"] = s.g;
  stats["rr1"] = s.rr1;
  stats["rr2"] = s.rr2;
  stats["cycle"] = s.cycle;
  stats["annotated_vertices"] = s.annotated_vertices;
  stats["annotated_edges"] = s.annotated_edges;
  stats["reduced_vertices"] = s.reduced_vertices;
  stats["reduced_edges"] = s.reduced_edges;
  stats["within_bounds"] = s.within_bounds();
  py::dict d;
  d["reduced"] = k.reduced;
  d["offset"] = k.offset;
  d["stats"] = stats;
  return d;
}

std::tuple<bool, minpsc::Weight> verify_py(const minpsc::Instance& inst,
                                           const std::vector<std::pair<minpsc::VertexId,
                                                                       minpsc::VertexId>>& pairs) {
  minpsc::EdgeSet ids;
  for (const auto& [u, v] : pairs) {
    const minpsc::EdgeId e = u < inst.vertex_count() && v < inst.vertex_count()
                                 ? inst.find_edge(u, v)
                                 : minpsc::Instance::kNoEdge;
    if (e == minpsc::Instance::kNoEdge)
      throw minpsc::InvalidInstance("no edge " + std::to_string(u) + "-" + std::to_string(v));
    ids.push_back(e);
  }
  if (!minpsc::is_connected_spanning(inst, ids)) return {false, 0};
  return {true, minpsc::cost(inst, minpsc::normalize_edge_set(inst, ids)).total_cost};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Min-power symmetric connectivity solvers";

  auto base = py::register_exception<minpsc::Error>(m, "MinPSCError");
  py::register_exception<minpsc::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<minpsc::GuardExceeded>(m, "GuardExceeded", base.ptr());

  py::class_<minpsc::Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("n"), py::arg("edges"),
           "Graph on vertices 0..n-1 from (u, v, w) triples.")
      .def_property_readonly("n", &minpsc::Instance::vertex_count)
      .def_property_readonly("m", &minpsc::Instance::edge_count)
      .def_property_readonly("edges",
                             [](const minpsc::Instance& inst) {
                               std::vector<EdgeTuple> out;
                               for (const auto& e : inst.edges()) out.emplace_back(e.u, e.v, e.w);
                               return out;
                             })
      .def("__eq__", [](const minpsc::Instance& a, const minpsc::Instance& b) { return a == b; })
      .def("__repr__", [](const minpsc::Instance& inst) {
        return "<minpsc.Instance n=" + std::to_string(inst.vertex_count()) +
               " m=" + std::to_string(inst.edge_count()) + ">";
      });

  m.def("parse_instance",
        [](const std::string& text) { return minpsc::parse_instance(text).instance; },
        py::arg("text"));
  m.def("read_instance",
        [](const std::string& path) { return minpsc::read_instance_file(path).instance; },
        py::arg("path"));
  m.def("render_instance",
        [](const minpsc::Instance& inst) { return minpsc::render_instance(inst); },
        py::arg("instance"));

  m.def("solve", &solve_py, py::arg("instance"), py::arg("algo") = "auto", py::arg("seed") = 1,
        py::arg("epsilon") = 0.1, py::arg("deterministic") = false,
        py::arg("lower_bounds") = py::none(),
        "Solve with one of auto, exact, brute-tree, connector, cc, kernel+exact, mst.");
  m.def("kernelize", &kernelize_py, py::arg("instance"));
  m.def("verify", &verify_py, py::arg("instance"), py::arg("edges"),
        "Returns (feasible, total cost) for a list of (u, v) pairs.");
  m.def("repetition_count", &minpsc::repetition_count, py::arg("epsilon"), py::arg("parts"));

  m.def(
      "generate_grid",
      [](std::size_t rows, std::size_t cols, double defect, bool perturbed, minpsc::Weight weight,
         std::uint64_t seed) {
        minpsc::GridParams p{rows, cols, defect,
                             perturbed ? minpsc::GridWeights::kPerturbed
                                       : minpsc::GridWeights::kUniform,
                             weight};
        return minpsc::generate_grid(p, seed);
      },
      py::arg("rows"), py::arg("cols"), py::arg("defect") = 0.0, py::arg("perturbed") = false,
      py::arg("weight") = 1, py::arg("seed") = 1);
  m.def(
      "generate_tree_plus",
      [](std::size_t n, std::size_t g, minpsc::Weight wmax, std::uint64_t seed) {
        return minpsc::generate_tree_plus({n, g, wmax}, seed);
      },
      py::arg("n"), py::arg("g"), py::arg("wmax") = 10, py::arg("seed") = 1);
  m.def(
      "generate_geometric",
      [](std::size_t n, double radius, double alpha, std::uint64_t seed) {
        return minpsc::generate_geometric({n, radius, alpha}, seed);
      },
      py::arg("n"), py::arg("radius") = 0.3, py::arg("alpha") = 2.0, py::arg("seed") = 1);
  m.def(
      "setcover_instance",
      [](std::size_t universe, const std::string& sets) {
        return minpsc::setcover_to_minpsc(minpsc::parse_set_cover(universe, sets));
      },
      py::arg("universe"), py::arg("sets"));

  m.attr("__version__") = "0.1.0";
}

#include "minpsc/bounds.hpp"

#include <algorithm>
#include <string>

namespace minpsc {

VertexLowerBounds trivial_lower_bounds(const Instance& instance) {
  const std::size_t n = instance.vertex_count();
  VertexLowerBounds ell(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    Weight lightest = kInfinity;
    Weight pendant = 0;
    for (const auto& inc : instance.neighbors(v)) {
      lightest = std::min(lightest, inc.w);
      if (instance.degree(inc.neighbor) == 1) pendant = std::max(pendant, inc.w);
    }
    ell[v] = instance.degree(v) == 0 ? 0 : std::max(lightest, pendant);
  }
  return ell;
}

bool validate_lower_bounds(const Instance& instance, const VertexLowerBounds& ell) {
  if (instance.vertex_count() > kLowerBoundCheckLimit)
    throw InstanceTooLarge("lower-bound validation enumerates spanning trees; n = " +
                           std::to_string(instance.vertex_count()) + " exceeds " +
                           std::to_string(kLowerBoundCheckLimit));
  if (ell.size() != instance.vertex_count()) throw InvalidParams("lower bound size mismatch");
  bool valid = true;
  std::vector<Weight> pay(instance.vertex_count());
  for_each_spanning_tree(instance, [&](std::span<const EdgeId> tree) {
    std::fill(pay.begin(), pay.end(), 0);
    for (EdgeId id : tree) {
      const Edge& e = instance.edge(id);
      pay[e.u] = std::max(pay[e.u], e.w);
      pay[e.v] = std::max(pay[e.v], e.w);
    }
    for (VertexId v = 0; v < pay.size(); ++v) {
      if (pay[v] < ell[v]) {
        valid = false;
        return false;
      }
    }
    return true;
  });
  return valid;
}

ObligatorySubgraph obligatory_subgraph(const Instance& instance, const VertexLowerBounds& ell) {
  if (ell.size() != instance.vertex_count()) throw InvalidParams("lower bound size mismatch");
  ObligatorySubgraph out;
  for (EdgeId id = 0; id < instance.edge_count(); ++id) {
    const Edge& e = instance.edge(id);
    if (std::min(ell[e.u], ell[e.v]) >= e.w) out.edges.push_back(id);
  }
  out.components = connected_components(instance, out.edges);
  return out;
}

PaddedInstance padded_graph(const Instance& instance, const ObligatorySubgraph& obligatory) {
  std::vector<Edge> edges = instance.edges();
  PaddedInstance out;
  out.base_edge_count = edges.size();
  for (const auto& members : obligatory.components.members) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (instance.find_edge(members[a], members[b]) != Instance::kNoEdge) continue;
        out.padded_edges.push_back(static_cast<EdgeId>(edges.size()));
        edges.push_back({members[a], members[b], 0});
      }
    }
  }
  out.graph = Instance(instance.vertex_count(), std::move(edges));
  return out;
}

}  // namespace minpsc

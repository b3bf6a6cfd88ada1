#pragma once

// Vertex lower bounds, the obligatory subgraph they induce, and the padded
// graph in which every obligatory component becomes a clique.

#include <cstddef>
#include <vector>

#include "minpsc/graph.hpp"

namespace minpsc {

/// l(v): a floor on the heaviest selected edge at v in every solution.
using VertexLowerBounds = std::vector<Weight>;

/// Lightest incident edge, raised to w({u,v}) for every degree-one
/// neighbor u of v (single pass). A lone vertex gets 0.
VertexLowerBounds trivial_lower_bounds(const Instance& instance);

inline constexpr std::size_t kLowerBoundCheckLimit = 12;

/// Checks the bound against every spanning tree. Throws InstanceTooLarge
/// above kLowerBoundCheckLimit vertices.
bool validate_lower_bounds(const Instance& instance, const VertexLowerBounds& ell);

struct ObligatorySubgraph {
  EdgeSet edges;            // {u,v} with min{l(u), l(v)} >= w({u,v})
  Components components;

  std::size_t component_count() const { return components.count(); }
};

ObligatorySubgraph obligatory_subgraph(const Instance& instance, const VertexLowerBounds& ell);

/// The input graph plus zero-weight edges between non-adjacent vertex pairs
/// inside each obligatory component. Original edges keep their ids; padded
/// edges are appended after them.
struct PaddedInstance {
  Instance graph;
  std::size_t base_edge_count = 0;
  EdgeSet padded_edges;

  bool is_base_edge(EdgeId e) const { return e < base_edge_count; }
};

PaddedInstance padded_graph(const Instance& instance, const ObligatorySubgraph& obligatory);

}  // namespace minpsc

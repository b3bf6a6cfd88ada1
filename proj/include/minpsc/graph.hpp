#pragma once

// Weighted undirected graphs, the min-power cost function and the basic
// connectivity utilities every solver builds on.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "minpsc/errors.hpp"

namespace minpsc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

/// Saturating addition: anything involving kInfinity stays kInfinity.
constexpr Weight sat_add(Weight a, Weight b) {
  if (a >= kInfinity || b >= kInfinity) return kInfinity;
  const Weight s = a + b;
  return s >= kInfinity ? kInfinity : s;
}

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight w = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  Weight w;
  EdgeId edge;
};

/// Simple undirected graph with nonnegative integer edge weights.
///
/// Edge ids are positions in the edge list, in insertion order; all
/// tie-breaking in the library is by edge id. The constructor checks the
/// structural invariants (ids in range, no self-loops, no parallel edges,
/// no negative weights). Positivity of weights and connectivity are
/// MinPSC-level requirements checked by `require_minpsc`.
class Instance {
 public:
  Instance() = default;
  Instance(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  /// Edge id joining u and v, or kNoEdge.
  EdgeId find_edge(VertexId u, VertexId v) const;

  static constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Throws InvalidInstance on zero weights and DisconnectedInstance when the
/// graph is not connected.
void require_minpsc(const Instance& instance);

bool is_connected(const Instance& instance);

using EdgeSet = std::vector<EdgeId>;

/// Sorted, duplicate-free copy of `edges`; throws InvalidInstance on ids out
/// of range.
EdgeSet normalize_edge_set(const Instance& instance, std::span<const EdgeId> edges);

struct Solution {
  EdgeSet edges;                      // sorted edge ids
  std::vector<Weight> per_vertex_cost;
  Weight total_cost = 0;
};

/// Per-vertex maxima and their sum for a connected spanning selection.
/// Throws DisconnectedSelection otherwise.
Solution cost(const Instance& instance, std::span<const EdgeId> edges);

/// Sum over v of max{floor[v], heaviest selected edge at v}; no connectivity
/// check. With an all-zero floor this is the plain MinPSC objective.
Weight annotated_cost(const Instance& instance, std::span<const EdgeId> edges,
                      std::span<const Weight> floor);

bool is_connected_spanning(const Instance& instance, std::span<const EdgeId> edges);

struct Components {
  std::vector<std::uint32_t> component_of;         // vertex -> component index
  std::vector<std::vector<VertexId>> members;      // sorted vertex lists

  std::size_t count() const { return members.size(); }
};

/// Maximal connected vertex sets of (V, edges); components are indexed in
/// order of their smallest vertex id.
Components connected_components(const Instance& instance, std::span<const EdgeId> edges);

struct FeedbackEdgeInfo {
  std::size_t g = 0;
  EdgeSet feedback_edges;
};

/// g = m - n + 1 and the non-tree edges of a BFS from vertex 0 that scans
/// adjacency lists in insertion order.
FeedbackEdgeInfo feedback_edge_info(const Instance& instance);

/// Kruskal on (weight, edge id); the returned Solution is costed as MinPSC.
Solution minimum_spanning_tree(const Instance& instance);

/// Orders solutions by (total cost, lexicographic edge set).
bool better_solution(const Solution& a, const Solution& b);

/// Kirchhoff count of spanning trees (floating point; exact for small graphs).
long double spanning_tree_count(const Instance& instance);

/// Calls `visit` with the sorted edge ids of every spanning tree, in a
/// deterministic order. Enumeration is by include/exclude branching on edges
/// in id order; a branch is cut as soon as excluding an edge would
/// disconnect the remaining graph. Returning false from `visit` stops early.
void for_each_spanning_tree(const Instance& instance,
                            const std::function<bool(std::span<const EdgeId>)>& visit);

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::uint32_t find(std::uint32_t x);
  bool unite(std::uint32_t a, std::uint32_t b);
  std::size_t set_count() const { return sets_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t sets_;
};

}  // namespace minpsc

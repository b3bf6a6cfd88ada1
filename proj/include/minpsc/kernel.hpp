#pragma once

// Data reduction for small feedback edge number g.
//
// Annotated MinPSC charges every vertex max{l(v), heaviest selected edge}.
// The reduction rules keep opt(original) = opt(current) + offset:
//   RR1  a degree-one vertex v with neighbor u is deleted; l(u) absorbs the
//        edge weight and the offset grows by max{w, l(v)}.
//   RR2  a path of degree-two vertices with h > 8 edges is replaced by a
//        7-edge representative that keeps the first, last and most
//        beneficial edge.
// De-annotation then turns every l(v) > 0 into a pendant edge of weight
// l(v). After RR1 and RR2 the annotated graph has O(g) vertices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minpsc/graph.hpp"

namespace minpsc {

struct AnnotatedInstance {
  Instance graph;
  std::vector<Weight> ell;   // one annotation per vertex
  Weight offset = 0;         // opt(original) = opt(this) + offset

  static AnnotatedInstance plain(const Instance& instance);
};

/// Annotated objective of a connected spanning selection of `ai.graph`.
Weight annotated_solution_cost(const AnnotatedInstance& ai, std::span<const EdgeId> edges);

/// v_0..v_h; the inner vertices v_1..v_{h-1} have degree two. v_0 = v_h is
/// allowed (a cycle hanging off one vertex).
struct DegreeTwoPath {
  std::vector<VertexId> vertices;

  std::size_t h() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Maximal degree-two paths (at least one inner vertex) between vertices of
/// degree at least three, in order of their first endpoint and first edge.
/// Empty for pure cycles.
std::vector<DegreeTwoPath> degree_two_paths(const AnnotatedInstance& ai);

/// Benefit of omitting {v_j, v_{j+1}}; requires 1 <= j <= h - 2.
Weight beta(const AnnotatedInstance& ai, const DegreeTwoPath& path, std::size_t j);

struct RepVertex {
  bool introduced = false;  // u_1 or u_2
  VertexId vertex = 0;      // path vertex when not introduced
  std::size_t index = 0;    // its position on the path
  Weight ell = 0;           // annotation carried into the reduced instance
};

struct Representative {
  std::size_t i = 0;                 // most beneficial edge {v_i, v_{i+1}}
  std::vector<RepVertex> vertices;   // 8 entries, 6 when i = 1 or i = h - 2
  std::vector<Weight> weights;       // weights[k] joins vertices[k], vertices[k+1]
  std::vector<std::size_t> deleted;  // path indices of removed inner vertices
  Weight adj = 0;                    // offset increase
};

/// Throws PathTooShort when h <= 8.
Representative representative(const AnnotatedInstance& ai, const DegreeTwoPath& path);

/// Exhaustive RR1. A lone remaining vertex is closed out: its annotation
/// moves into the offset.
AnnotatedInstance apply_rr1(const AnnotatedInstance& ai);

/// Exhaustive RR2; requires minimum degree two.
AnnotatedInstance apply_rr2(const AnnotatedInstance& ai);

struct CycleSolution {
  Weight cost = 0;
  EdgeSet edges;  // all cycle edges but one
};

/// Cheapest way to span a graph that is a single cycle. Throws NotACycle.
CycleSolution solve_cycle(const AnnotatedInstance& ai);

/// Plain instance with a pendant of weight l(v) for every l(v) > 0;
/// annotations become 0 and the offset drops by their sum. Pendants get
/// the ids after the existing vertices.
AnnotatedInstance deannotate(const AnnotatedInstance& ai);

struct UndoEntry {
  enum class Kind { kRr1, kRr2, kCycle, kCollapse };
  Kind kind = Kind::kRr1;
  // kRr1: the removed edge. kCycle: the kept cycle edges.
  EdgeSet edges;
  // kRr2: path edges e_0..e_{h-1}, the replacing edges in path order, the
  // path vertices and their annotations when the rule fired.
  EdgeSet path_edges;
  EdgeSet rep_edges;
  std::vector<VertexId> path_vertices;
  std::vector<Weight> path_ell;
  std::size_t chosen = 0;
};

/// Enough to map a solution of the reduced instance back to the input.
/// Edge ids in entries refer to `edges`, the table of every edge that ever
/// existed during reduction; the first `original.edge_count()` of them are
/// the input edges.
struct UndoLog {
  Instance original;
  std::vector<Edge> edges;
  std::vector<UndoEntry> entries;
  /// Reduced edge id -> working edge id, kNoEdge for pendant edges.
  std::vector<EdgeId> reduced_edge_origin;
};

struct KernelStats {
  std::size_t n = 0, m = 0, g = 0;
  std::size_t annotated_vertices = 0, annotated_edges = 0;  // after RR1/RR2
  std::size_t reduced_vertices = 0, reduced_edges = 0;      // after de-annotation
  std::size_t rr1 = 0, rr2 = 0;
  bool cycle = false;  // pure cycle, closed out by solve_cycle

  std::int64_t annotated_vertex_bound() const { return 20 * std::int64_t(g) - 13; }
  std::int64_t annotated_edge_bound() const { return 21 * std::int64_t(g) - 14; }
  std::int64_t vertex_bound() const { return 40 * std::int64_t(g) - 26; }
  std::int64_t edge_bound() const { return 41 * std::int64_t(g) - 27; }
  /// Size bounds hold (only meaningful for g >= 1 and non-cycle inputs).
  bool within_bounds() const;
};

struct KernelResult {
  Instance reduced;
  Weight offset = 0;  // opt(input) = opt(reduced) + offset
  UndoLog log;
  KernelStats stats;
};

KernelResult kernelize(const Instance& instance);

/// Maps a solution of the reduced instance to one of the input. The result
/// costs at most cost(reduced) + offset, with equality when the reduced
/// solution is optimal. Throws InconsistentLog on selections that do not
/// fit the log.
Solution lift(const UndoLog& log, std::span<const EdgeId> reduced_solution);

struct KernelSolveResult {
  Solution solution;
  KernelStats stats;
  Weight offset = 0;
  Weight reduced_cost = 0;
  std::string reduced_solver;  // which solver handled the reduced instance
};

/// Kernelize, solve the reduced instance exactly, lift.
KernelSolveResult solve_via_kernel(const Instance& instance);

}  // namespace minpsc

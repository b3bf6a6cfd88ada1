#pragma once

// Min-power colorful connected subgraph (MinPCCS) by dynamic programming
// over color subsets.
//
// Given a vertex coloring, floors l(v) and the color set C = {0..k-1}, find
// a connected subgraph T = (W, F) whose vertices carry every color of C
// exactly once, minimizing sum_{v in W} max{l(v), heaviest F-edge at v}.
//
// Table entry D[v, q, C'] is the cheapest tree on colors C' that contains v,
// in which v pays exactly p = max{l(v), w({v,q})} and no tree edge at v is
// heavier than p. The anchor q ranges over N(v) and the sentinel q = v
// (virtual weight 0, so p = l(v)); the sentinel is what lets a single
// vertex form a tree. Entries are filled by increasing |C'| from
//   split:  D[v,q,C1] + D[v,q,C2] - p      C1 u C2 = C', C1 n C2 = {col v}
//   extend: D[u,q',C' \ {col v}] + p       u in N(v), w({u,v}) <= p,
//                                          w({u,v}) <= max{l(u), w({u,q'})}
// Anchors of v with the same p describe identical subproblems and share one
// row of the table.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minpsc/graph.hpp"

namespace minpsc {

using Color = std::uint32_t;
using ColorMask = std::uint32_t;

inline constexpr unsigned kDefaultColorGuard = 25;

struct PccsProblem {
  const Instance& graph;
  /// Colors >= color_count mark vertices outside the color set.
  std::span<const Color> coloring;
  std::span<const Weight> floor;
  unsigned color_count;
  /// Optional per-vertex amount subtracted from what a tree vertex pays; the
  /// table then minimizes objective - sum_{v in W} rebate(v). Empty means 0.
  std::span<const Weight> rebate = {};
};

struct PccsOptions {
  unsigned max_colors = kDefaultColorGuard;
};

struct PccsTree {
  Weight value = 0;               // table value of the root entry
  Weight objective = 0;           // MinPCCS objective of the witness
  Weight rebate = 0;              // sum of rebates over the witness vertices
  std::vector<VertexId> vertices; // sorted
  EdgeSet edges;                  // sorted edge ids of the problem graph
};

/// Receives (mask being computed, mask read) for every table read.
class PccsReadObserver {
 public:
  virtual ~PccsReadObserver() = default;
  virtual void on_read(ColorMask computing, ColorMask read) = 0;
};

/// The filled table. Holds a reference to the problem graph, which must
/// outlive it.
class PccsTable {
 public:
  static PccsTable build(const PccsProblem& problem, const PccsOptions& options = {},
                         PccsReadObserver* observer = nullptr);

  unsigned color_count() const { return colors_; }
  ColorMask full_mask() const { return colors_ == 32 ? ~0u : (1u << colors_) - 1; }

  /// D[v, anchor, mask]; anchor == v selects the sentinel. kInfinity when
  /// col(v) is not in mask or no feasible tree exists.
  Weight value(VertexId v, VertexId anchor, ColorMask mask) const;

  /// Replays back-pointers from the entry. The replayed recurrence value
  /// must reproduce the stored one (CorruptTable otherwise). Precondition:
  /// the entry is finite.
  PccsTree reconstruct(VertexId v, VertexId anchor, ColorMask mask) const;

  /// Cheapest full-color entry over all (v, anchor), reconstructed; nullopt
  /// when infeasible. Ties go to the smallest vertex, then the smallest pay.
  /// Throws CorruptTable unless objective - rebate equals the table value.
  std::optional<PccsTree> best() const;

 private:
  PccsTable() = default;

  template <bool kObserve>
  void fill(PccsReadObserver* observer);

  std::size_t slot(VertexId v, std::size_t cls, ColorMask mask) const;
  std::size_t class_of_anchor(VertexId v, VertexId anchor) const;
  PccsTree reconstruct_class(VertexId v, std::size_t cls, ColorMask mask) const;
  Weight replay(VertexId v, std::size_t cls, ColorMask mask, PccsTree& out) const;
  ColorMask find_split(VertexId v, std::size_t cls, ColorMask mask) const;

  const Instance* graph_ = nullptr;
  std::vector<Color> coloring_;
  std::vector<Weight> floor_;
  std::vector<Weight> rebate_;
  unsigned colors_ = 0;

  // Per vertex: distinct pays ascending (index 0 is the sentinel pay l(v)).
  std::vector<std::vector<Weight>> pays_;
  std::vector<std::size_t> base_;  // first slot of each vertex
  std::vector<Weight> values_;
  std::vector<std::uint64_t> back_;
  std::vector<std::uint32_t> best_from_;  // argmin class among classes >= c
};

/// Builds the table and returns its best entry.
std::optional<PccsTree> solve_pccs(const PccsProblem& problem, const PccsOptions& options = {});

}  // namespace minpsc

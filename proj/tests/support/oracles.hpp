#pragma once

// Test-only reference implementations. They deliberately avoid the library's
// solvers and cost function so they can serve as independent oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "minpsc/graph.hpp"

namespace oracle {

using minpsc::Edge;
using minpsc::Instance;
using minpsc::VertexId;
using minpsc::Weight;

inline constexpr Weight kNone = std::numeric_limits<Weight>::max();

inline Instance fig1() {
  return Instance(6, {{0, 1, 5}, {1, 2, 6}, {2, 3, 5}, {1, 4, 4}, {2, 5, 3}, {4, 5, 1}});
}

// Edge ids of fig1's optimal selection and of its minimum spanning tree.
inline std::vector<minpsc::EdgeId> fig1_optimal_edges() { return {0, 1, 2, 4, 5}; }
inline std::vector<minpsc::EdgeId> fig1_mst_edges() { return {0, 2, 3, 4, 5}; }

/// Union-find free connectivity test over the vertices in `keep` (all when
/// empty) using only the edges whose bit is set.
inline bool connects(std::size_t n, const std::vector<Edge>& edges, std::uint64_t edge_mask,
                     const std::vector<char>& keep = {}) {
  std::vector<std::vector<VertexId>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(edge_mask >> i & 1)) continue;
    adj[edges[i].u].push_back(edges[i].v);
    adj[edges[i].v].push_back(edges[i].u);
  }
  std::vector<char> seen(n, 0);
  VertexId start = 0;
  std::size_t want = n;
  if (!keep.empty()) {
    want = static_cast<std::size_t>(std::count(keep.begin(), keep.end(), 1));
    if (want == 0) return true;
    while (!keep[start]) ++start;
  }
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      ++reached;
      stack.push_back(y);
    }
  }
  return reached == want;
}

/// Sum over vertices of max(floor, heaviest selected incident edge).
inline Weight power_cost(std::size_t n, const std::vector<Edge>& edges, std::uint64_t edge_mask,
                         const std::vector<Weight>& floor = {}) {
  std::vector<Weight> pay(n, 0);
  if (!floor.empty()) pay = floor;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!(edge_mask >> i & 1)) continue;
    pay[edges[i].u] = std::max(pay[edges[i].u], edges[i].w);
    pay[edges[i].v] = std::max(pay[edges[i].v], edges[i].w);
  }
  return std::accumulate(pay.begin(), pay.end(), Weight{0});
}

/// Minimum over every connected spanning edge subset (m <= 24).
inline Weight min_over_subsets(const Instance& inst, const std::vector<Weight>& floor = {}) {
  const auto& edges = inst.edges();
  Weight best = kNone;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    if (!connects(inst.vertex_count(), edges, mask)) continue;
    best = std::min(best, power_cost(inst.vertex_count(), edges, mask, floor));
  }
  return best;
}

/// Calls fn(mask) for every edge subset of size n - 1 that is a spanning tree.
inline void for_each_tree_mask(const Instance& inst,
                               const std::function<void(std::uint64_t)>& fn) {
  const auto& edges = inst.edges();
  const std::size_t n = inst.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) + 1 != n) continue;
    if (connects(n, edges, mask)) fn(mask);
  }
}

inline Weight min_over_trees(const Instance& inst, const std::vector<Weight>& floor = {}) {
  Weight best = kNone;
  for_each_tree_mask(inst, [&](std::uint64_t mask) {
    best = std::min(best, power_cost(inst.vertex_count(), inst.edges(), mask, floor));
  });
  return best;
}

/// Brute-force MinPCCS: every vertex set W hitting each color exactly once,
/// every spanning tree of G[W]. Returns kNone when infeasible.
inline Weight pccs(const Instance& inst, const std::vector<std::uint32_t>& coloring,
                   const std::vector<Weight>& floor, unsigned colors) {
  const std::size_t n = inst.vertex_count();
  const auto& edges = inst.edges();
  Weight best = kNone;
  for (std::uint32_t w = 1; w < (1u << n); ++w) {
    std::uint32_t seen = 0;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (!(w >> v & 1)) continue;
      if (coloring[v] >= colors || (seen >> coloring[v] & 1)) ok = false;
      seen |= 1u << coloring[v];
    }
    if (!ok || seen != (1u << colors) - 1) continue;
    std::vector<char> keep(n, 0);
    for (std::size_t v = 0; v < n; ++v) keep[v] = static_cast<char>(w >> v & 1);
    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (keep[edges[i].u] && keep[edges[i].v]) inner.push_back(i);
    const std::size_t need = static_cast<std::size_t>(__builtin_popcount(w)) - 1;
    for (std::uint32_t pick = 0; pick < (1u << inner.size()); ++pick) {
      if (static_cast<std::size_t>(__builtin_popcount(pick)) != need) continue;
      std::uint64_t mask = 0;
      for (std::size_t j = 0; j < inner.size(); ++j)
        if (pick >> j & 1) mask |= std::uint64_t{1} << inner[j];
      if (!connects(n, edges, mask, keep)) continue;
      Weight cost = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (!keep[v]) continue;
        Weight pay = floor[v];
        for (std::size_t i = 0; i < edges.size(); ++i)
          if ((mask >> i & 1) && (edges[i].u == v || edges[i].v == v))
            pay = std::max(pay, edges[i].w);
        cost += pay;
      }
      best = std::min(best, cost);
    }
  }
  return best;
}

/// Minimum number of sets covering the universe, by recursion on the first
/// uncovered element. kNone when no cover exists.
inline std::size_t set_cover(std::size_t universe, const std::vector<std::vector<std::size_t>>& sets) {
  std::function<std::size_t(std::uint32_t, std::size_t)> go = [&](std::uint32_t covered,
                                                                  std::size_t used) -> std::size_t {
    if (covered == (1u << universe) - 1) return used;
    std::size_t first = 0;
    while (covered >> first & 1) ++first;
    std::size_t best = static_cast<std::size_t>(kNone);
    for (const auto& s : sets) {
      if (std::find(s.begin(), s.end(), first) == s.end()) continue;
      std::uint32_t next = covered;
      for (std::size_t u : s) next |= 1u << u;
      best = std::min(best, go(next, used + 1));
    }
    return best;
  };
  return go(0, 0);
}

/// Random connected graph: a random tree plus each remaining pair with
/// probability `density`. Weights uniform in 1..wmax.
inline Instance random_connected(std::size_t n, Weight wmax, double density, std::mt19937_64& rng) {
  std::uniform_int_distribution<Weight> weight(1, wmax);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const VertexId a = perm[i], b = perm[pick(rng)];
    has[a][b] = has[b][a] = 1;
    edges.push_back({std::min(a, b), std::max(a, b), weight(rng)});
  }
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b)
      if (!has[a][b] && coin(rng) < density) edges.push_back({a, b, weight(rng)});
  return Instance(n, std::move(edges));
}

/// Same graph with vertex v renamed perm[v].
inline Instance relabel(const Instance& inst, const std::vector<VertexId>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : inst.edges()) edges.push_back({perm[e.u], perm[e.v], e.w});
  return Instance(inst.vertex_count(), std::move(edges));
}

/// Path v_0..v_h with the given weights.
inline Instance path(const std::vector<Weight>& weights) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < weights.size(); ++i)
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), weights[i]});
  return Instance(weights.size() + 1, std::move(edges));
}

/// Cycle 0..n-1 with the given weights; edge i joins i and i+1 mod n.
inline Instance cycle(const std::vector<Weight>& weights) {
  std::vector<Edge> edges;
  const auto n = static_cast<VertexId>(weights.size());
  for (VertexId i = 0; i < n; ++i) {
    const VertexId j = (i + 1) % n;
    edges.push_back({std::min(i, j), std::max(i, j), weights[i]});
  }
  return Instance(n, std::move(edges));
}

}  // namespace oracle

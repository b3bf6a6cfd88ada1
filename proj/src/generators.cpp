#include "minpsc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>

#include "minpsc/random.hpp"

namespace minpsc {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

Weight uniform_weight(std::mt19937_64& rng, Weight lo, Weight hi) {
  return lo + static_cast<Weight>(uniform_index(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

Instance generate_grid(const GridParams& p, std::uint64_t seed) {
  if (p.rows == 0 || p.cols == 0) throw InvalidParams("grid needs at least one row and column");
  if (!(p.defect_prob >= 0.0 && p.defect_prob < 1.0))
    throw InvalidParams("defect probability must lie in [0, 1)");
  if (p.weight < 1) throw InvalidParams("grid weight must be positive");

  std::mt19937_64 rng(seed);
  const std::size_t cells = p.rows * p.cols;
  std::vector<char> present(cells, 1);
  for (std::size_t c = 0; c < cells; ++c)
    if (uniform_unit(rng) < p.defect_prob) present[c] = 0;

  // Grid edges in row-major order: right neighbor, then down neighbor.
  struct GridEdge {
    std::size_t a, b;
    Weight w;
  };
  std::vector<GridEdge> grid_edges;
  for (std::size_t r = 0; r < p.rows; ++r) {
    for (std::size_t c = 0; c < p.cols; ++c) {
      const std::size_t a = r * p.cols + c;
      const std::size_t nbrs[2] = {c + 1 < p.cols ? a + 1 : cells,
                                   r + 1 < p.rows ? a + p.cols : cells};
      for (std::size_t b : nbrs) {
        if (b == cells) continue;
        const Weight w = p.weights == GridWeights::kUniform
                             ? p.weight
                             : uniform_weight(rng, p.weight, 2 * p.weight);
        if (present[a] && present[b]) grid_edges.push_back({a, b, w});
      }
    }
  }

  DisjointSets sets(cells);
  for (const auto& e : grid_edges)
    sets.unite(static_cast<std::uint32_t>(e.a), static_cast<std::uint32_t>(e.b));
  std::vector<std::size_t> size(cells, 0);
  for (std::size_t c = 0; c < cells; ++c)
    if (present[c]) ++size[sets.find(static_cast<std::uint32_t>(c))];
  std::size_t best_root = cells;
  for (std::size_t c = 0; c < cells; ++c) {
    if (!present[c]) continue;
    const std::size_t root = sets.find(static_cast<std::uint32_t>(c));
    if (best_root == cells || size[root] > size[best_root]) best_root = root;
  }
  if (best_root == cells) throw DisconnectedResult("every grid vertex was dropped");

  std::vector<VertexId> id(cells, 0);
  VertexId next = 0;
  for (std::size_t c = 0; c < cells; ++c)
    if (present[c] && sets.find(static_cast<std::uint32_t>(c)) == best_root) id[c] = next++;
  std::vector<Edge> edges;
  for (const auto& e : grid_edges)
    if (sets.find(static_cast<std::uint32_t>(e.a)) == best_root) edges.push_back({id[e.a], id[e.b], e.w});
  return Instance(next, std::move(edges));
}

Instance generate_tree_plus(const TreePlusParams& p, std::uint64_t seed) {
  if (p.n == 0) throw InvalidParams("tree needs at least one vertex");
  if (p.wmax < 1) throw InvalidParams("wmax must be positive");
  const std::size_t n = p.n;
  const std::size_t max_extra = n * (n - 1) / 2 - (n - 1);
  if (p.g > max_extra)
    throw InvalidParams("g = " + std::to_string(p.g) + " exceeds the " +
                        std::to_string(max_extra) + " available vertex pairs");

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> used;
  if (n == 2) {
    edges.push_back({0, 1, uniform_weight(rng, 1, p.wmax)});
  } else if (n > 2) {
    std::vector<VertexId> code(n - 2);
    for (auto& x : code) x = static_cast<VertexId>(uniform_index(rng, n));
    std::vector<std::size_t> degree(n, 1);
    for (VertexId x : code) ++degree[x];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (VertexId x : code) {
      const VertexId leaf = leaves.top();
      leaves.pop();
      edges.push_back({std::min(leaf, x), std::max(leaf, x), 0});
      if (--degree[x] == 1) leaves.push(x);
    }
    const VertexId a = leaves.top();
    leaves.pop();
    const VertexId b = leaves.top();
    edges.push_back({std::min(a, b), std::max(a, b), 0});
    for (auto& e : edges) e.w = uniform_weight(rng, 1, p.wmax);
  }
  for (const auto& e : edges) used.insert(pair_key(e.u, e.v));

  for (std::size_t added = 0; added < p.g;) {
    const auto u = static_cast<VertexId>(uniform_index(rng, n));
    const auto v = static_cast<VertexId>(uniform_index(rng, n));
    if (u == v || !used.insert(pair_key(u, v)).second) continue;
    edges.push_back({std::min(u, v), std::max(u, v), uniform_weight(rng, 1, p.wmax)});
    ++added;
  }
  return Instance(n, std::move(edges));
}

Instance generate_geometric(const GeometricParams& p, std::uint64_t seed) {
  if (p.n == 0) throw InvalidParams("geometric instance needs at least one vertex");
  if (!(p.radius > 0.0)) throw InvalidParams("radius must be positive");
  if (!(p.alpha > 0.0)) throw InvalidParams("alpha must be positive");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kGeometricAttempts; ++attempt) {
    std::vector<double> x(p.n), y(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
      x[i] = uniform_unit(rng);
      y[i] = uniform_unit(rng);
    }
    std::vector<Edge> edges;
    for (VertexId a = 0; a < p.n; ++a) {
      for (VertexId b = a + 1; b < p.n; ++b) {
        const double dist = std::hypot(x[a] - x[b], y[a] - y[b]);
        if (dist > p.radius) continue;
        const auto w = static_cast<Weight>(std::ceil(std::pow(dist, p.alpha) * 100.0));
        edges.push_back({a, b, std::max<Weight>(1, w)});
      }
    }
    Instance inst(p.n, std::move(edges));
    if (is_connected(inst)) return inst;
  }
  throw DisconnectedResult("no connected geometric instance after " +
                           std::to_string(kGeometricAttempts) + " attempts");
}

}  // namespace minpsc

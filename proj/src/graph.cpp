#include "minpsc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>

namespace minpsc {

namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t DisjointSets::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

Instance::Instance(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  if (vertex_count == 0) throw InvalidInstance("instance must have at least one vertex");
  if (edges_.size() >= kNoEdge) throw InvalidInstance("too many edges");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size() * 2);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw InvalidInstance("edge " + std::to_string(id) + " has an endpoint out of range");
    if (e.u == e.v) throw InvalidInstance("self-loop at vertex " + std::to_string(e.u));
    if (e.w < 0) throw InvalidInstance("negative weight on edge " + std::to_string(id));
    if (!seen.insert(pair_key(e.u, e.v)).second)
      throw InvalidInstance("parallel edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "}");
    adjacency_[e.u].push_back({e.v, e.w, id});
    adjacency_[e.v].push_back({e.u, e.w, id});
  }
}

EdgeId Instance::find_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return kNoEdge;
  const auto& list = adjacency_[degree(u) <= degree(v) ? u : v];
  const VertexId target = degree(u) <= degree(v) ? v : u;
  for (const auto& inc : list)
    if (inc.neighbor == target) return inc.edge;
  return kNoEdge;
}

void require_minpsc(const Instance& instance) {
  for (EdgeId id = 0; id < instance.edge_count(); ++id)
    if (instance.edge(id).w <= 0)
      throw InvalidInstance("edge " + std::to_string(id) + " has nonpositive weight");
  if (!is_connected(instance)) throw DisconnectedInstance("instance graph is not connected");
}

bool is_connected(const Instance& instance) {
  const std::size_t n = instance.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& inc : instance.neighbors(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

EdgeSet normalize_edge_set(const Instance& instance, std::span<const EdgeId> edges) {
  EdgeSet out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= instance.edge_count())
    throw InvalidInstance("edge id " + std::to_string(out.back()) + " out of range");
  return out;
}

bool is_connected_spanning(const Instance& instance, std::span<const EdgeId> edges) {
  DisjointSets sets(instance.vertex_count());
  for (EdgeId id : edges) {
    if (id >= instance.edge_count()) return false;
    sets.unite(instance.edge(id).u, instance.edge(id).v);
  }
  return sets.set_count() == 1;
}

Weight annotated_cost(const Instance& instance, std::span<const EdgeId> edges,
                      std::span<const Weight> floor) {
  std::vector<Weight> pay(floor.begin(), floor.end());
  pay.resize(instance.vertex_count(), 0);
  for (EdgeId id : edges) {
    const Edge& e = instance.edge(id);
    pay[e.u] = std::max(pay[e.u], e.w);
    pay[e.v] = std::max(pay[e.v], e.w);
  }
  Weight total = 0;
  for (Weight p : pay) total += p;
  return total;
}

Solution cost(const Instance& instance, std::span<const EdgeId> edges) {
  Solution sol;
  sol.edges = normalize_edge_set(instance, edges);
  if (!is_connected_spanning(instance, sol.edges))
    throw DisconnectedSelection("edge set does not connect all vertices");
  sol.per_vertex_cost.assign(instance.vertex_count(), 0);
  for (EdgeId id : sol.edges) {
    const Edge& e = instance.edge(id);
    sol.per_vertex_cost[e.u] = std::max(sol.per_vertex_cost[e.u], e.w);
    sol.per_vertex_cost[e.v] = std::max(sol.per_vertex_cost[e.v], e.w);
  }
  sol.total_cost = std::accumulate(sol.per_vertex_cost.begin(), sol.per_vertex_cost.end(),
                                   Weight{0});
  return sol;
}

Components connected_components(const Instance& instance, std::span<const EdgeId> edges) {
  const std::size_t n = instance.vertex_count();
  DisjointSets sets(n);
  for (EdgeId id : edges) sets.unite(instance.edge(id).u, instance.edge(id).v);

  Components out;
  out.component_of.assign(n, 0);
  std::vector<std::uint32_t> index_of_root(n, std::numeric_limits<std::uint32_t>::max());
  for (VertexId v = 0; v < n; ++v) {
    const auto root = sets.find(v);
    if (index_of_root[root] == std::numeric_limits<std::uint32_t>::max()) {
      index_of_root[root] = static_cast<std::uint32_t>(out.members.size());
      out.members.emplace_back();
    }
    out.component_of[v] = index_of_root[root];
    out.members[index_of_root[root]].push_back(v);
  }
  return out;
}

FeedbackEdgeInfo feedback_edge_info(const Instance& instance) {
  const std::size_t n = instance.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<char> tree_edge(instance.edge_count(), 0);
  std::queue<VertexId> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (const auto& inc : instance.neighbors(v)) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      tree_edge[inc.edge] = 1;
      ++reached;
      queue.push(inc.neighbor);
    }
  }
  if (reached != n) throw DisconnectedInstance("feedback edge number needs a connected graph");

  FeedbackEdgeInfo info;
  for (EdgeId id = 0; id < instance.edge_count(); ++id)
    if (!tree_edge[id]) info.feedback_edges.push_back(id);
  info.g = info.feedback_edges.size();
  return info;
}

Solution minimum_spanning_tree(const Instance& instance) {
  std::vector<EdgeId> order(instance.edge_count());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return instance.edge(a).w < instance.edge(b).w;
  });
  DisjointSets sets(instance.vertex_count());
  EdgeSet tree;
  for (EdgeId id : order)
    if (sets.unite(instance.edge(id).u, instance.edge(id).v)) tree.push_back(id);
  return cost(instance, tree);
}

bool better_solution(const Solution& a, const Solution& b) {
  if (a.total_cost != b.total_cost) return a.total_cost < b.total_cost;
  return a.edges < b.edges;
}

long double spanning_tree_count(const Instance& instance) {
  const std::size_t n = instance.vertex_count();
  if (n == 1) return 1.0L;
  // Determinant of the Laplacian with the last row and column removed.
  const std::size_t k = n - 1;
  std::vector<long double> lap(k * k, 0.0L);
  for (const Edge& e : instance.edges()) {
    if (e.u < k) lap[e.u * k + e.u] += 1;
    if (e.v < k) lap[e.v * k + e.v] += 1;
    if (e.u < k && e.v < k) {
      lap[e.u * k + e.v] -= 1;
      lap[e.v * k + e.u] -= 1;
    }
  }
  long double det = 1.0L;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r)
      if (std::fabs(lap[r * k + col]) > std::fabs(lap[pivot * k + col])) pivot = r;
    if (std::fabs(lap[pivot * k + col]) < 1e-12L) return 0.0L;
    if (pivot != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(lap[pivot * k + c], lap[col * k + c]);
      det = -det;
    }
    det *= lap[col * k + col];
    for (std::size_t r = col + 1; r < k; ++r) {
      const long double f = lap[r * k + col] / lap[col * k + col];
      if (f == 0.0L) continue;
      for (std::size_t c = col; c < k; ++c) lap[r * k + c] -= f * lap[col * k + c];
    }
  }
  return std::round(std::fabs(det));
}

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const Instance& instance,
                 const std::function<bool(std::span<const EdgeId>)>& visit)
      : instance_(instance), visit_(visit), excluded_(instance.edge_count(), 0) {}

  void run() {
    if (instance_.vertex_count() == 1) {
      visit_({});
      return;
    }
    if (!is_connected(instance_)) return;
    recurse(0);
  }

 private:
  // Connectivity of (V, edges not excluded); chosen edges are a subset.
  bool remaining_connected() const {
    DisjointSets sets(instance_.vertex_count());
    for (EdgeId id = 0; id < instance_.edge_count(); ++id)
      if (!excluded_[id]) sets.unite(instance_.edge(id).u, instance_.edge(id).v);
    return sets.set_count() == 1;
  }

  bool chosen_acyclic_with(EdgeId candidate) const {
    DisjointSets sets(instance_.vertex_count());
    for (EdgeId id : chosen_) sets.unite(instance_.edge(id).u, instance_.edge(id).v);
    return sets.unite(instance_.edge(candidate).u, instance_.edge(candidate).v);
  }

  bool recurse(EdgeId next) {
    if (chosen_.size() + 1 == instance_.vertex_count()) return visit_(chosen_);
    if (next == instance_.edge_count()) return true;
    if (chosen_acyclic_with(next)) {
      chosen_.push_back(next);
      const bool go_on = recurse(next + 1);
      chosen_.pop_back();
      if (!go_on) return false;
    }
    excluded_[next] = 1;
    bool go_on = true;
    if (remaining_connected()) go_on = recurse(next + 1);
    excluded_[next] = 0;
    return go_on;
  }

  const Instance& instance_;
  const std::function<bool(std::span<const EdgeId>)>& visit_;
  std::vector<char> excluded_;
  EdgeSet chosen_;
};

}  // namespace

void for_each_spanning_tree(const Instance& instance,
                            const std::function<bool(std::span<const EdgeId>)>& visit) {
  TreeEnumerator(instance, visit).run();
}

}  // namespace minpsc

#include "minpsc/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace minpsc {

Solution solve_exact_dp(const Instance& instance, const PccsOptions& options) {
  require_minpsc(instance);
  const std::size_t n = instance.vertex_count();
  if (n == 1) return cost(instance, {});
  if (n > options.max_colors)
    throw TooManyColors("exact DP needs one color per vertex; n = " + std::to_string(n) +
                        " exceeds the guard of " + std::to_string(options.max_colors));
  std::vector<Color> coloring(n);
  std::iota(coloring.begin(), coloring.end(), Color{0});
  const std::vector<Weight> floor(n, 0);
  const PccsProblem problem{instance, coloring, floor, static_cast<unsigned>(n)};
  const auto tree = solve_pccs(problem, options);
  if (!tree) throw DisconnectedInstance("no spanning tree found");
  Solution sol = cost(instance, tree->edges);
  if (sol.total_cost != tree->value)
    throw CorruptTable("exact DP value " + std::to_string(tree->value) +
                       " differs from the re-costed witness " + std::to_string(sol.total_cost));
  return sol;
}

Solution brute_force_tree(const Instance& instance, const BruteForceTreeOptions& options) {
  require_minpsc(instance);
  if (options.max_trees) {
    const long double count = spanning_tree_count(instance);
    if (count > *options.max_trees)
      throw InstanceTooLarge("instance has about " + std::to_string(count) +
                             " spanning trees, above the budget");
  } else if (instance.vertex_count() > options.max_vertices) {
    throw InstanceTooLarge("spanning-tree enumeration is limited to " +
                           std::to_string(options.max_vertices) + " vertices");
  }

  const std::vector<Weight> zero(instance.vertex_count(), 0);
  Weight best_cost = kInfinity;
  EdgeSet best_edges;
  for_each_spanning_tree(instance, [&](std::span<const EdgeId> tree) {
    const Weight c = annotated_cost(instance, tree, zero);
    if (c < best_cost) {
      best_cost = c;
      best_edges.assign(tree.begin(), tree.end());
    }
    return true;
  });
  return cost(instance, best_edges);
}

Solution brute_force_connector(const Instance& instance, const VertexLowerBounds& ell,
                               const ConnectorOptions& options) {
  require_minpsc(instance);
  const ObligatorySubgraph obl = obligatory_subgraph(instance, ell);
  const std::size_t c = obl.component_count();
  if (c == 1) return cost(instance, obl.edges);

  const auto& comp = obl.components.component_of;
  EdgeSet candidates;
  for (EdgeId id = 0; id < instance.edge_count(); ++id) {
    const Edge& e = instance.edge(id);
    if (comp[e.u] != comp[e.v]) candidates.push_back(id);
  }
  const std::size_t k = c - 1;
  if (candidates.size() < k) throw DisconnectedInstance("components cannot be joined");
  const long double combos =
      std::exp(std::lgamma(static_cast<long double>(candidates.size()) + 1) -
               std::lgamma(static_cast<long double>(k) + 1) -
               std::lgamma(static_cast<long double>(candidates.size() - k) + 1));
  if (combos > options.max_combinations * (1 + 1e-9L))
    throw InstanceTooLarge("about " + std::to_string(combos) +
                           " connector sets exceed the budget");

  const std::vector<Weight> zero(instance.vertex_count(), 0);
  EdgeSet selection = obl.edges;
  const std::size_t fixed = selection.size();
  selection.resize(fixed + k);

  Weight best_cost = kInfinity;
  EdgeSet best_edges;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    DisjointSets sets(c);
    bool tree = true;
    for (std::size_t i = 0; i < k && tree; ++i) {
      const Edge& e = instance.edge(candidates[pick[i]]);
      tree = sets.unite(comp[e.u], comp[e.v]);
      selection[fixed + i] = candidates[pick[i]];
    }
    if (tree) {
      const Weight value = annotated_cost(instance, selection, zero);
      if (value < best_cost) {
        best_cost = value;
        best_edges = normalize_edge_set(instance, selection);
      } else if (value == best_cost) {
        EdgeSet sorted = normalize_edge_set(instance, selection);
        if (sorted < best_edges) best_edges = std::move(sorted);
      }
    }
    // Next k-combination of candidate indices.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == candidates.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return cost(instance, best_edges);
}

}  // namespace minpsc

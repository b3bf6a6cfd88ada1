#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "minpsc/errors.hpp"
#include "minpsc/graph.hpp"
#include "support/oracles.hpp"

using namespace minpsc;

TEST_CASE("cost of the optimal fig1 selection") {
  const Instance g = oracle::fig1();
  const Solution s = cost(g, oracle::fig1_optimal_edges());
  CHECK(s.total_cost == 26);
  CHECK(s.per_vertex_cost == std::vector<Weight>{5, 6, 6, 5, 1, 3});
}

TEST_CASE("cost of a single edge") {
  const Instance g(2, {{0, 1, 3}});
  CHECK(cost(g, std::vector<EdgeId>{0}).total_cost == 6);
}

TEST_CASE("cost of the fig1 minimum spanning tree") {
  const Instance g = oracle::fig1();
  CHECK(cost(g, oracle::fig1_mst_edges()).total_cost == 27);
}

TEST_CASE("single vertex costs nothing") {
  const Instance g(1, {});
  const Solution s = cost(g, std::vector<EdgeId>{});
  CHECK(s.total_cost == 0);
  CHECK(s.per_vertex_cost == std::vector<Weight>{0});
}

TEST_CASE("cost rejects selections that do not connect") {
  const Instance g = oracle::fig1();
  CHECK_THROWS_AS(cost(g, std::vector<EdgeId>{0}), DisconnectedSelection);
}

TEST_CASE("is_connected_spanning") {
  const Instance g = oracle::fig1();
  std::vector<EdgeId> all(6);
  std::iota(all.begin(), all.end(), 0u);
  CHECK(is_connected_spanning(g, all));
  CHECK_FALSE(is_connected_spanning(g, std::vector<EdgeId>{0}));
  CHECK(is_connected_spanning(g, oracle::fig1_optimal_edges()));
}

TEST_CASE("connected components are indexed by smallest vertex") {
  const Instance g = oracle::fig1();
  const Components three = connected_components(g, std::vector<EdgeId>{0, 2, 5});
  REQUIRE(three.count() == 3);
  CHECK(three.members[0] == std::vector<VertexId>{0, 1});
  CHECK(three.members[1] == std::vector<VertexId>{2, 3});
  CHECK(three.members[2] == std::vector<VertexId>{4, 5});
  CHECK(three.component_of == std::vector<std::uint32_t>{0, 0, 1, 1, 2, 2});

  const Instance four(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  CHECK(connected_components(four, std::vector<EdgeId>{}).count() == 4);

  std::vector<EdgeId> all(6);
  std::iota(all.begin(), all.end(), 0u);
  CHECK(connected_components(g, all).count() == 1);
}

TEST_CASE("feedback edge number") {
  const Instance tree(7, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {1, 4, 1}, {2, 5, 1}, {2, 6, 1}});
  CHECK(feedback_edge_info(tree).g == 0);
  CHECK(feedback_edge_info(tree).feedback_edges.empty());
  CHECK(feedback_edge_info(oracle::cycle({1, 2, 3, 4, 5})).g == 1);
  CHECK(feedback_edge_info(oracle::fig1()).g == 1);
}

TEST_CASE("minimum spanning tree baseline") {
  const Instance g = oracle::fig1();
  const Solution mst = minimum_spanning_tree(g);
  CHECK(mst.edges == EdgeSet{0, 2, 3, 4, 5});
  CHECK(mst.total_cost == 27);

  const Instance p = oracle::path({3, 1, 2});
  CHECK(minimum_spanning_tree(p).edges == EdgeSet{0, 1, 2});

  // Uniform K4: every tree weighs 3w, ties go to the smallest edge ids.
  const Instance k4(4, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}});
  CHECK(minimum_spanning_tree(k4).edges == EdgeSet{0, 1, 2});
}

TEST_CASE("spanning tree enumeration matches Kirchhoff's count") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance g = oracle::random_connected(6, 5, 0.5, rng);
    std::size_t count = 0;
    for_each_spanning_tree(g, [&](std::span<const EdgeId> tree) {
      CHECK(tree.size() == 5);
      CHECK(is_connected_spanning(g, tree));
      ++count;
      return true;
    });
    std::size_t oracle_count = 0;
    oracle::for_each_tree_mask(g, [&](std::uint64_t) { ++oracle_count; });
    CHECK(count == oracle_count);
    CHECK(static_cast<double>(spanning_tree_count(g)) == doctest::Approx(double(count)));
  }
}

TEST_CASE("property: the best spanning tree is the best connected spanning subgraph") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 6;
    const Instance g = oracle::random_connected(n, 6, 0.35, rng);
    if (g.edge_count() > 16) continue;
    CHECK(oracle::min_over_trees(g) == oracle::min_over_subsets(g));
  }
}

TEST_CASE("property: removing an edge never raises the cost") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance g = oracle::random_connected(6, 6, 0.5, rng);
    EdgeSet all(g.edge_count());
    std::iota(all.begin(), all.end(), 0u);
    const Weight full = cost(g, all).total_cost;
    for (EdgeId drop = 0; drop < g.edge_count(); ++drop) {
      EdgeSet rest;
      for (EdgeId e : all)
        if (e != drop) rest.push_back(e);
      if (is_connected_spanning(g, rest)) CHECK(cost(g, rest).total_cost <= full);
    }
  }
}

TEST_CASE("property: cost is invariant under vertex relabeling") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance g = oracle::random_connected(7, 9, 0.4, rng);
    std::vector<VertexId> perm(7);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Instance h = oracle::relabel(g, perm);
    const Solution t = minimum_spanning_tree(g);
    // Edge ids are preserved by relabel, so the same selection is comparable.
    const Solution s = cost(h, t.edges);
    CHECK(s.total_cost == t.total_cost);
    for (VertexId v = 0; v < 7; ++v) CHECK(s.per_vertex_cost[perm[v]] == t.per_vertex_cost[v]);
  }
}

TEST_CASE("property: g = m - n + 1 and the feedback edges leave a spanning tree") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance g = oracle::random_connected(3 + trial % 9, 4, 0.3, rng);
    const FeedbackEdgeInfo info = feedback_edge_info(g);
    CHECK(info.g == g.edge_count() - g.vertex_count() + 1);
    CHECK(info.feedback_edges.size() == info.g);
    EdgeSet tree;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!std::binary_search(info.feedback_edges.begin(), info.feedback_edges.end(), e))
        tree.push_back(e);
    CHECK(tree.size() + 1 == g.vertex_count());
    CHECK(is_connected_spanning(g, tree));
  }
}

TEST_CASE("instance construction rejects malformed graphs") {
  CHECK_THROWS_AS(Instance(2, {{0, 0, 1}}), InvalidInstance);
  CHECK_THROWS_AS(Instance(2, {{0, 1, 1}, {1, 0, 2}}), InvalidInstance);
  CHECK_THROWS_AS(Instance(2, {{0, 2, 1}}), InvalidInstance);
  CHECK_THROWS_AS(require_minpsc(Instance(2, {{0, 1, 0}})), InvalidInstance);
  CHECK_THROWS_AS(require_minpsc(Instance(3, {{0, 1, 1}})), DisconnectedInstance);
}

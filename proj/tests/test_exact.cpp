#include <doctest.h>

#include <numeric>
#include <random>

#include "minpsc/bounds.hpp"
#include "minpsc/errors.hpp"
#include "minpsc/exact.hpp"
#include "support/oracles.hpp"

using namespace minpsc;

TEST_CASE("fig1 under every exact solver") {
  const Instance g = oracle::fig1();
  CHECK(solve_exact_dp(g).total_cost == 26);
  CHECK(brute_force_tree(g).total_cost == 26);
  CHECK(brute_force_connector(g, trivial_lower_bounds(g)).total_cost == 26);
  CHECK(solve_exact_dp(g).edges == EdgeSet{0, 1, 2, 4, 5});
}

TEST_CASE("trees are their own solution") {
  const Instance star(5, {{0, 1, 3}, {0, 2, 1}, {0, 3, 4}, {0, 4, 2}});
  const EdgeSet all{0, 1, 2, 3};
  CHECK(solve_exact_dp(star).edges == all);
  CHECK(brute_force_tree(star).edges == all);
  CHECK(brute_force_connector(star, trivial_lower_bounds(star)).edges == all);
  CHECK(solve_exact_dp(star).total_cost == 4 + 3 + 1 + 4 + 2);
}

TEST_CASE("4-cycle drops its heaviest edge") {
  const Instance c4 = oracle::cycle({1, 2, 3, 4});
  const Solution s = solve_exact_dp(c4);
  CHECK(s.total_cost == brute_force_tree(c4).total_cost);
  CHECK(s.total_cost == oracle::min_over_trees(c4));
  CHECK(s.edges == EdgeSet{0, 1, 2});
  CHECK(s.total_cost == 1 + 2 + 3 + 3);
}

TEST_CASE("triangle") {
  const Instance t(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}});
  CHECK(brute_force_tree(t).total_cost == 5);
  CHECK(brute_force_tree(t).edges == EdgeSet{0, 1});
  CHECK(solve_exact_dp(t).total_cost == 5);
}

TEST_CASE("single vertex") {
  const Instance one(1, {});
  CHECK(solve_exact_dp(one).total_cost == 0);
  CHECK(brute_force_tree(one).total_cost == 0);
  CHECK(brute_force_connector(one, {0}).total_cost == 0);
}

TEST_CASE("connector returns E_l when it already connects") {
  const Instance g(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 2}});
  const VertexLowerBounds ell = trivial_lower_bounds(g);
  const Solution s = brute_force_connector(g, ell);
  CHECK(s.edges == obligatory_subgraph(g, ell).edges);
}

TEST_CASE("guards") {
  std::vector<Edge> path;
  for (VertexId v = 0; v + 1 < 12; ++v) path.push_back({v, v + 1, 1});
  const Instance p12(12, path);
  CHECK_THROWS_AS(brute_force_tree(p12), InstanceTooLarge);
  CHECK(brute_force_tree(p12, {10, 10.0L}).total_cost == 12);
  CHECK_THROWS_AS(solve_exact_dp(p12, PccsOptions{11}), TooManyColors);
  CHECK_THROWS_AS(brute_force_connector(oracle::fig1(), VertexLowerBounds(6, 0), {2.0L}),
                  InstanceTooLarge);
}

TEST_CASE("property: exact DP, tree enumeration and connector agree") {
  std::mt19937_64 rng(200);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const Instance g = oracle::random_connected(n, 6, 0.4, rng);
    const Solution dp = solve_exact_dp(g);
    const Solution tree = brute_force_tree(g);
    const Solution conn = brute_force_connector(g, trivial_lower_bounds(g));
    CHECK(dp.total_cost == tree.total_cost);
    CHECK(conn.total_cost == tree.total_cost);
    CHECK(tree.total_cost == oracle::min_over_trees(g));
    CHECK(is_connected_spanning(g, dp.edges));
    CHECK(is_connected_spanning(g, conn.edges));
  }
}

TEST_CASE("property: exact DP value survives vertex relabeling") {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance g = oracle::random_connected(8, 9, 0.4, rng);
    std::vector<VertexId> perm(8);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(solve_exact_dp(g).total_cost == solve_exact_dp(oracle::relabel(g, perm)).total_cost);
  }
}

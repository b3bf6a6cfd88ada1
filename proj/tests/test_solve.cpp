#include <doctest.h>

#include <random>

#include "minpsc/errors.hpp"
#include "minpsc/exact.hpp"
#include "minpsc/generators.hpp"
#include "minpsc/solve.hpp"
#include "support/oracles.hpp"

using namespace minpsc;

TEST_CASE("algorithm names round-trip") {
  for (const char* name : {"auto", "exact", "brute-tree", "connector", "cc", "kernel+exact", "mst"})
    CHECK(algorithm_name(parse_algorithm(name)) == name);
  CHECK_THROWS_AS(parse_algorithm("greedy"), InvalidParams);
}

TEST_CASE("fig1 under every algorithm") {
  const Instance g = oracle::fig1();
  for (Algorithm a : {Algorithm::kAuto, Algorithm::kExact, Algorithm::kBruteTree,
                      Algorithm::kConnector, Algorithm::kCc, Algorithm::kKernelExact}) {
    SolveOptions opt;
    opt.algo = a;
    opt.deterministic = true;
    const SolveReport r = solve(g, opt);
    CHECK(r.solution.total_cost == 26);
    CHECK(r.margin == 7);
    CHECK(r.c == 3);
    CHECK(r.g == 1);
  }
  SolveOptions mst;
  mst.algo = Algorithm::kMst;
  CHECK(solve(g, mst).solution.total_cost == 27);
  CHECK(solve(g, mst).solution.edges == EdgeSet(oracle::fig1_mst_edges()));
}

TEST_CASE("auto dispatch") {
  CHECK(solve(oracle::fig1()).used == Algorithm::kKernelExact);

  // Complete graph on 7 vertices with equal weights: g = 15, c = 1.
  std::vector<Edge> k7;
  for (VertexId a = 0; a < 7; ++a)
    for (VertexId b = a + 1; b < 7; ++b) k7.push_back({a, b, 3});
  const SolveReport r = solve(Instance(7, k7));
  CHECK(r.used == Algorithm::kCc);
  CHECK(r.solution.total_cost == 21);

  // g > 12 and many components.
  std::mt19937_64 rng(4);
  Instance dense = oracle::random_connected(12, 40, 0.6, rng);
  const SolveReport d = solve(dense);
  CHECK(d.g > kAutoKernelMaxG);
  if (2 * d.c - 2 > kAutoCcMaxColors) {
    CHECK(d.used == Algorithm::kExact);
  } else {
    CHECK(d.used == Algorithm::kCc);
  }
  CHECK(d.solution.total_cost == solve_exact_dp(dense).total_cost);
}

TEST_CASE("explicit lower bounds are checked") {
  SolveOptions opt;
  opt.algo = Algorithm::kConnector;
  opt.lower_bounds = VertexLowerBounds{1, 2};
  CHECK_THROWS_AS(solve(oracle::fig1(), opt), InvalidParams);
  opt.lower_bounds = VertexLowerBounds(6, 0);
  CHECK(solve(oracle::fig1(), opt).solution.total_cost == 26);
}

TEST_CASE("property: all exact routes agree") {
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance g = oracle::random_connected(2 + trial % 7, 6, 0.35, rng);
    const Weight expected = oracle::min_over_trees(g);
    for (Algorithm a : {Algorithm::kAuto, Algorithm::kExact, Algorithm::kBruteTree,
                        Algorithm::kConnector, Algorithm::kKernelExact}) {
      SolveOptions opt;
      opt.algo = a;
      CHECK(solve(g, opt).solution.total_cost == expected);
    }
    SolveOptions cc;
    cc.algo = Algorithm::kCc;
    cc.deterministic = true;
    CHECK(solve(g, cc).solution.total_cost == expected);
  }
}

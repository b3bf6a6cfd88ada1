#include <doctest.h>

#include "minpsc/bounds.hpp"
#include "minpsc/errors.hpp"
#include "minpsc/generators.hpp"

using namespace minpsc;

TEST_CASE("grids") {
  const Instance g = generate_grid({5, 5, 0.0, GridWeights::kUniform, 1}, 1);
  CHECK(g.vertex_count() == 25);
  CHECK(g.edge_count() == 40);
  CHECK(obligatory_subgraph(g, trivial_lower_bounds(g)).component_count() == 1);

  const Instance perturbed = generate_grid({6, 7, 0.0, GridWeights::kPerturbed, 3}, 2);
  for (const Edge& e : perturbed.edges()) {
    CHECK(e.w >= 3);
    CHECK(e.w <= 6);
  }

  const Instance holes = generate_grid({8, 8, 0.3, GridWeights::kUniform, 1}, 3);
  CHECK(holes.vertex_count() < 64);
  CHECK(is_connected_spanning(holes, [&] {
    EdgeSet all(holes.edge_count());
    for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
    return all;
  }()));
}

TEST_CASE("tree plus g chords") {
  const Instance tree = generate_tree_plus({50, 0, 10}, 1);
  CHECK(tree.edge_count() == 49);
  CHECK(feedback_edge_info(tree).g == 0);

  const Instance g3 = generate_tree_plus({50, 3, 10}, 7);
  CHECK(g3.vertex_count() == 50);
  CHECK(g3.edge_count() == 52);
  CHECK(feedback_edge_info(g3).g == 3);
  for (const Edge& e : g3.edges()) {
    CHECK(e.w >= 1);
    CHECK(e.w <= 10);
  }
  CHECK_THROWS_AS(generate_tree_plus({4, 4, 10}, 1), InvalidParams);
  CHECK_THROWS_AS(generate_tree_plus({0, 0, 10}, 1), InvalidParams);
  CHECK_THROWS_AS(generate_tree_plus({5, 0, 0}, 1), InvalidParams);
}

TEST_CASE("generators are deterministic in their seed") {
  CHECK(generate_tree_plus({80, 4, 9}, 11) == generate_tree_plus({80, 4, 9}, 11));
  CHECK_FALSE(generate_tree_plus({80, 4, 9}, 11) == generate_tree_plus({80, 4, 9}, 12));
  CHECK(generate_grid({6, 6, 0.2, GridWeights::kPerturbed, 2}, 5) ==
        generate_grid({6, 6, 0.2, GridWeights::kPerturbed, 2}, 5));
  CHECK(generate_geometric({25, 0.4, 2.0}, 8) == generate_geometric({25, 0.4, 2.0}, 8));
}

TEST_CASE("geometric instances are connected") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance g = generate_geometric({30, 0.35, 2.0}, seed);
    CHECK(g.vertex_count() == 30);
    CHECK(connected_components(g, [&] {
            EdgeSet all(g.edge_count());
            for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
            return all;
          }()).count() == 1);
    for (const Edge& e : g.edges()) CHECK(e.w >= 1);
  }
  CHECK_THROWS_AS(generate_geometric({40, 0.01, 2.0}, 1), DisconnectedResult);
  CHECK_THROWS_AS(generate_geometric({10, 0.0, 2.0}, 1), InvalidParams);
  CHECK_THROWS_AS(generate_grid({0, 3, 0.0, GridWeights::kUniform, 1}, 1), InvalidParams);
  CHECK_THROWS_AS(generate_grid({3, 3, 1.0, GridWeights::kUniform, 1}, 1), InvalidParams);
}

#pragma once

// Set Cover to MinPSC above the lower bound.

#include <cstddef>
#include <string_view>
#include <vector>

#include "minpsc/graph.hpp"

namespace minpsc {

struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::size_t>> sets;
};

/// Parses "0,1;1,2;2" into sets over {0..universe_size-1}.
SetCoverInstance parse_set_cover(std::size_t universe_size, std::string_view sets);

/// Vertex 0 is the hub s, vertices 1..n_u the elements, then one vertex per
/// set. Edges: hub-set (weight 1) for every set, in set order, then
/// element-set (weight 2) for every membership. Throws UncoveredElement if
/// an element belongs to no set.
Instance setcover_to_minpsc(const SetCoverInstance& sc);

VertexId setcover_hub();
VertexId setcover_element_vertex(const SetCoverInstance& sc, std::size_t element);
VertexId setcover_set_vertex(const SetCoverInstance& sc, std::size_t set);

/// Solution cost minus the sum over vertices of their lightest incident
/// edge in the instance.
Weight margin(const Instance& instance, const Solution& solution);

/// Sum over vertices of their lightest incident edge.
Weight lightest_edge_sum(const Instance& instance);

inline constexpr std::size_t kSetCoverBruteForceLimit = 20;

/// Size of a minimum cover by subset enumeration; throws InstanceTooLarge
/// above kSetCoverBruteForceLimit sets and UncoveredElement if no cover exists.
std::size_t brute_force_set_cover(const SetCoverInstance& sc);

}  // namespace minpsc

#pragma once

// Exact reference solvers.

#include <cstddef>
#include <optional>

#include "minpsc/bounds.hpp"
#include "minpsc/graph.hpp"
#include "minpsc/pccs.hpp"

namespace minpsc {

/// Subset DP over all vertices (every vertex its own color, zero floors).
/// O(3^n (m + n)); throws TooManyColors when n exceeds options.max_colors.
Solution solve_exact_dp(const Instance& instance, const PccsOptions& options = {});

struct BruteForceTreeOptions {
  std::size_t max_vertices = 10;
  /// When set, replaces the vertex guard by a bound on the Kirchhoff
  /// spanning-tree count.
  std::optional<long double> max_trees;
};

/// Minimum over all spanning trees; ties go to the lexicographically
/// smallest edge set. Throws InstanceTooLarge beyond the guard.
Solution brute_force_tree(const Instance& instance, const BruteForceTreeOptions& options = {});

struct ConnectorOptions {
  /// Cap on the number of candidate connector sets examined.
  long double max_combinations = 1e7L;
};

/// E_l plus the cheapest set of c - 1 non-obligatory edges that joins the c
/// obligatory components. Optimal whenever `ell` is a valid lower bound.
/// Throws InstanceTooLarge beyond the combination cap.
Solution brute_force_connector(const Instance& instance, const VertexLowerBounds& ell,
                               const ConnectorOptions& options = {});

}  // namespace minpsc

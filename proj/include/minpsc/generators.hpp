#pragma once

// Seeded random instance families. Every generator is a deterministic
// function of its parameters and seed.

#include <cstddef>
#include <cstdint>

#include "minpsc/graph.hpp"

namespace minpsc {

enum class GridWeights {
  kUniform,    // every edge weighs `weight`
  kPerturbed,  // weight + uniform integer in [0, weight]
};

struct GridParams {
  std::size_t rows = 5;
  std::size_t cols = 5;
  double defect_prob = 0.0;  // each vertex is dropped independently
  GridWeights weights = GridWeights::kUniform;
  Weight weight = 1;
};

/// Grid graph with random vertex defects; the largest surviving component
/// is kept (ties: the one containing the smallest grid position) and
/// relabeled row-major.
Instance generate_grid(const GridParams& params, std::uint64_t seed);

struct TreePlusParams {
  std::size_t n = 50;
  std::size_t g = 0;   // extra edges on top of a spanning tree
  Weight wmax = 10;    // weights uniform in 1..wmax
};

/// Uniform random labeled tree (Pruefer code) plus g distinct random chords,
/// so the feedback edge number is exactly g.
Instance generate_tree_plus(const TreePlusParams& params, std::uint64_t seed);

struct GeometricParams {
  std::size_t n = 30;
  double radius = 0.3;
  double alpha = 2.0;
};

inline constexpr int kGeometricAttempts = 100;

/// Uniform points in the unit square, an edge between points at distance
/// at most `radius`, weight ceil(100 * dist^alpha) (at least 1). Resamples
/// until connected; throws DisconnectedResult after kGeometricAttempts.
Instance generate_geometric(const GeometricParams& params, std::uint64_t seed);

}  // namespace minpsc

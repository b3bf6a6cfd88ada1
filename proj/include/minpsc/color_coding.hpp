#pragma once

// Color-coding solver parameterized by c, the number of connected
// components of the obligatory subgraph.
//
// For each composition (c_1..c_c) of at most 2c-2 colors, component i is
// colored from its own block C_i of c_i consecutive colors, the MinPCCS
// instance on the padded graph is solved, and the witness T = (W, F) is
// turned into the MinPSC solution (F n E) u E_l.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "minpsc/bounds.hpp"
#include "minpsc/graph.hpp"
#include "minpsc/pccs.hpp"

namespace minpsc {

struct Composition {
  std::vector<unsigned> parts;                 // c_i >= 1
  std::vector<std::vector<Color>> color_sets;  // C_i, consecutive blocks

  unsigned color_count() const;
};

/// All positive tuples of length c with sum <= 2c - 2, lexicographic.
/// Requires c >= 2.
std::vector<Composition> enumerate_compositions(std::size_t c);

/// Builds the composition with the given parts and consecutive color blocks.
Composition make_composition(std::vector<unsigned> parts);

/// ceil(ln eps / ln(1 - p)) with p = prod c_i! / c_i^c_i, at least 1; 1 when
/// p = 1. Requires 0 < eps < 1.
std::uint64_t repetition_count(double epsilon, const std::vector<unsigned>& parts);

/// Number of colorings in the exhaustive family, prod c_i^{n_i} (floating
/// point, saturates to infinity).
long double coloring_family_size(const Components& components, const Composition& comp);

/// Each vertex of component i gets an independent uniform color from C_i.
std::vector<Color> random_coloring(const Components& components, const Composition& comp,
                                   std::mt19937_64& rng);

/// Streams every coloring of the exhaustive family (the Cartesian product of
/// per-component colorings) in odometer order. `visit` returns false to stop.
void for_each_coloring(const Components& components, const Composition& comp,
                       const std::function<bool(const std::vector<Color>&)>& visit);

enum class CcMode { kRandomized, kDeterministic };

struct CcConfig {
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  CcMode mode = CcMode::kRandomized;
  /// Per-composition cap on t; hitting it is reported as truncation.
  std::optional<std::uint64_t> max_repetitions;
  /// Total colorings the deterministic mode may enumerate before handing the
  /// instance to the exact DP.
  long double coloring_budget = 1e7L;
  PccsOptions pccs;
  /// Rank witnesses by objective - sum_{v in W} l(v), which is what the
  /// MinPSC solution built from them costs up to a constant. With false the
  /// plain MinPCCS objective is minimized instead.
  bool rebate_floors = true;
};

struct CcStats {
  std::size_t components = 0;        // c
  std::size_t compositions = 0;      // compositions with c_i <= n_i for all i
  std::uint64_t colorings = 0;       // MinPCCS instances solved
  std::uint64_t feasible = 0;        // ... of which had a colorful tree
  bool truncated = false;            // max_repetitions cut some t short
  bool exact_fallback = false;       // deterministic budget exceeded
};

struct CcResult {
  Solution solution;
  CcStats stats;
};

/// Throws TooManyColors when 2c - 2 exceeds the color guard, InvalidParams
/// on eps outside (0, 1).
CcResult solve_minpsc_cc(const Instance& instance, const VertexLowerBounds& ell,
                         const CcConfig& config = {});

/// Seed of the RNG stream for one (composition, repetition) work item.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t composition, std::uint64_t repetition);

}  // namespace minpsc

#pragma once

// Algorithm dispatch shared by the command-line tool and the Python module.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minpsc/bounds.hpp"
#include "minpsc/graph.hpp"

namespace minpsc {

enum class Algorithm { kAuto, kExact, kBruteTree, kConnector, kCc, kKernelExact, kMst };

/// Accepts auto, exact, brute-tree, connector, cc, kernel+exact, mst.
Algorithm parse_algorithm(std::string_view name);
std::string algorithm_name(Algorithm algo);

struct SolveOptions {
  Algorithm algo = Algorithm::kAuto;
  std::uint64_t seed = 1;
  double epsilon = 0.1;
  bool deterministic = false;
  std::optional<std::uint64_t> max_repetitions;
  /// Lower bounds for cc and connector; trivial bounds when absent.
  std::optional<VertexLowerBounds> lower_bounds;
};

struct SolveReport {
  Solution solution;
  Algorithm used = Algorithm::kAuto;  // concrete algorithm that ran
  std::size_t c = 0;                  // obligatory components
  std::size_t g = 0;                  // feedback edge number
  Weight margin = 0;
  double time_ms = 0.0;
  std::vector<std::string> notes;     // fallbacks, truncation, solver choices
};

/// `auto` runs kernel+exact for g <= kAutoKernelMaxG, else deterministic
/// color coding when 2c - 2 <= kAutoCcMaxColors, else the exact DP.
inline constexpr std::size_t kAutoKernelMaxG = 12;
inline constexpr std::size_t kAutoCcMaxColors = 10;

SolveReport solve(const Instance& instance, const SolveOptions& options = {});

}  // namespace minpsc

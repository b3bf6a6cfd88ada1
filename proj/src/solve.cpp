#include "minpsc/solve.hpp"

#include <chrono>

#include "minpsc/color_coding.hpp"
#include "minpsc/exact.hpp"
#include "minpsc/hardness.hpp"
#include "minpsc/kernel.hpp"

namespace minpsc {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "auto") return Algorithm::kAuto;
  if (name == "exact") return Algorithm::kExact;
  if (name == "brute-tree") return Algorithm::kBruteTree;
  if (name == "connector") return Algorithm::kConnector;
  if (name == "cc") return Algorithm::kCc;
  if (name == "kernel+exact") return Algorithm::kKernelExact;
  if (name == "mst") return Algorithm::kMst;
  throw InvalidParams("unknown algorithm '" + std::string(name) + "'");
}

std::string algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::kAuto: return "auto";
    case Algorithm::kExact: return "exact";
    case Algorithm::kBruteTree: return "brute-tree";
    case Algorithm::kConnector: return "connector";
    case Algorithm::kCc: return "cc";
    case Algorithm::kKernelExact: return "kernel+exact";
    case Algorithm::kMst: return "mst";
  }
  return "unknown";
}

SolveReport solve(const Instance& instance, const SolveOptions& options) {
  require_minpsc(instance);
  const auto start = std::chrono::steady_clock::now();

  SolveReport report;
  const VertexLowerBounds ell =
      options.lower_bounds ? *options.lower_bounds : trivial_lower_bounds(instance);
  if (ell.size() != instance.vertex_count()) throw InvalidParams("lower bound size mismatch");
  report.c = obligatory_subgraph(instance, ell).component_count();
  report.g = instance.edge_count() + 1 - instance.vertex_count();

  Algorithm algo = options.algo;
  bool deterministic = options.deterministic;
  if (algo == Algorithm::kAuto) {
    if (report.g <= kAutoKernelMaxG) {
      algo = Algorithm::kKernelExact;
    } else if (report.c == 1 || 2 * report.c - 2 <= kAutoCcMaxColors) {
      algo = Algorithm::kCc;
      deterministic = true;
    } else {
      algo = Algorithm::kExact;
    }
  }
  report.used = algo;

  switch (algo) {
    case Algorithm::kExact:
      report.solution = solve_exact_dp(instance);
      break;
    case Algorithm::kBruteTree:
      report.solution = brute_force_tree(instance);
      break;
    case Algorithm::kConnector:
      report.solution = brute_force_connector(instance, ell);
      break;
    case Algorithm::kCc: {
      CcConfig config;
      config.epsilon = options.epsilon;
      config.seed = options.seed;
      config.mode = deterministic ? CcMode::kDeterministic : CcMode::kRandomized;
      config.max_repetitions = options.max_repetitions;
      CcResult r = solve_minpsc_cc(instance, ell, config);
      report.solution = std::move(r.solution);
      report.notes.push_back(deterministic ? "mode=deterministic" : "mode=randomized");
      if (r.stats.truncated) report.notes.push_back("repetitions truncated");
      if (r.stats.exact_fallback) report.notes.push_back("coloring budget exceeded; exact DP used");
      break;
    }
    case Algorithm::kKernelExact: {
      KernelSolveResult r = solve_via_kernel(instance);
      report.solution = std::move(r.solution);
      report.notes.push_back("reduced " + std::to_string(r.stats.reduced_vertices) +
                             " vertices, solver=" + r.reduced_solver);
      break;
    }
    case Algorithm::kMst:
      report.solution = minimum_spanning_tree(instance);
      break;
    case Algorithm::kAuto:
      break;
  }
  report.margin = margin(instance, report.solution);
  report.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
  return report;
}

}  // namespace minpsc

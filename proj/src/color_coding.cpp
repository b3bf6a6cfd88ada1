#include "minpsc/color_coding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "minpsc/exact.hpp"
#include "minpsc/random.hpp"

namespace minpsc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void compositions_rec(std::vector<unsigned>& prefix, std::size_t length, unsigned budget,
                      std::vector<Composition>& out) {
  const std::size_t remaining = length - prefix.size();
  if (remaining == 0) {
    out.push_back(make_composition(prefix));
    return;
  }
  // Leave at least one color for each later part.
  for (unsigned part = 1; part + (remaining - 1) <= budget; ++part) {
    prefix.push_back(part);
    compositions_rec(prefix, length, budget - part, out);
    prefix.pop_back();
  }
}

struct Best {
  Weight cost = kInfinity;
  EdgeSet edges;

  void offer(const Instance& instance, EdgeSet candidate) {
    const std::vector<Weight> zero(instance.vertex_count(), 0);
    const Weight c = annotated_cost(instance, candidate, zero);
    if (c < cost || (c == cost && candidate < edges)) {
      cost = c;
      edges = std::move(candidate);
    }
  }
};

class Runner {
 public:
  Runner(const Instance& instance, const VertexLowerBounds& ell, const ObligatorySubgraph& obl,
         const CcConfig& config)
      : instance_(instance),
        ell_(ell),
        obl_(obl),
        config_(config),
        padded_(padded_graph(instance, obl)),
        search_(search_graph(padded_, obl)) {}

  // Solves one MinPCCS instance and offers the resulting MinPSC solution.
  void run(const Composition& comp, const std::vector<Color>& coloring) {
    ++stats.colorings;
    std::span<const Weight> rebate;
    if (config_.rebate_floors) rebate = ell_;
    const PccsProblem problem{search_, coloring, ell_, comp.color_count(), rebate};
    const auto tree = solve_pccs(problem, config_.pccs);
    if (!tree) return;
    ++stats.feasible;
    EdgeSet edges = obl_.edges;
    for (EdgeId e : tree->edges)
      if (padded_.is_base_edge(e) && !inside_component(e)) edges.push_back(e);
    edges = normalize_edge_set(instance_, edges);
    if (!is_connected_spanning(instance_, edges))
      throw CorruptTable("color-coding witness does not connect the instance");
    best.offer(instance_, std::move(edges));
  }

  CcStats stats;
  Best best;

 private:
  // The padded graph with every edge inside an obligatory component set to
  // weight 0. A heavy non-obligatory edge between two vertices of one
  // component would otherwise block the free zero-weight shortcut.
  static Instance search_graph(const PaddedInstance& padded, const ObligatorySubgraph& obl) {
    std::vector<Edge> edges = padded.graph.edges();
    const auto& comp = obl.components.component_of;
    for (Edge& e : edges)
      if (comp[e.u] == comp[e.v]) e.w = 0;
    return Instance(padded.graph.vertex_count(), std::move(edges));
  }

  bool inside_component(EdgeId e) const {
    const Edge& edge = instance_.edge(e);
    return obl_.components.component_of[edge.u] == obl_.components.component_of[edge.v];
  }

  const Instance& instance_;
  const VertexLowerBounds& ell_;
  const ObligatorySubgraph& obl_;
  const CcConfig& config_;
  PaddedInstance padded_;
  Instance search_;
};

bool uses_every_color(const Composition& comp, const std::vector<Color>& coloring) {
  std::vector<char> seen(comp.color_count(), 0);
  for (Color col : coloring) seen[col] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

}  // namespace

unsigned Composition::color_count() const {
  unsigned total = 0;
  for (unsigned p : parts) total += p;
  return total;
}

Composition make_composition(std::vector<unsigned> parts) {
  Composition comp;
  Color next = 0;
  for (unsigned p : parts) {
    if (p == 0) throw InvalidParams("composition parts must be positive");
    auto& set = comp.color_sets.emplace_back();
    for (unsigned j = 0; j < p; ++j) set.push_back(next++);
  }
  comp.parts = std::move(parts);
  return comp;
}

std::vector<Composition> enumerate_compositions(std::size_t c) {
  if (c < 2) throw InvalidParams("compositions need at least two components");
  std::vector<Composition> out;
  std::vector<unsigned> prefix;
  compositions_rec(prefix, c, static_cast<unsigned>(2 * c - 2), out);
  return out;
}

std::uint64_t repetition_count(double epsilon, const std::vector<unsigned>& parts) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidParams("epsilon must lie in (0, 1)");
  // log p = sum (log c_i! - c_i log c_i)
  double log_p = 0.0;
  for (unsigned part : parts) {
    const double ci = part;
    log_p += std::lgamma(ci + 1.0) - ci * std::log(ci);
  }
  if (log_p >= -1e-12) return 1;
  const double p = std::exp(log_p);
  const double t = std::log(epsilon) / std::log1p(-p);
  // Absorb rounding noise on exact integer quotients such as ln .5 / ln .5.
  const double rounded = std::ceil(t - 1e-9);
  if (rounded >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(rounded));
}

long double coloring_family_size(const Components& components, const Composition& comp) {
  long double total = 1.0L;
  for (std::size_t i = 0; i < components.count(); ++i)
    total *= std::pow(static_cast<long double>(comp.parts[i]),
                      static_cast<long double>(components.members[i].size()));
  return total;
}

std::vector<Color> random_coloring(const Components& components, const Composition& comp,
                                   std::mt19937_64& rng) {
  std::vector<Color> coloring(components.component_of.size());
  for (std::size_t i = 0; i < components.count(); ++i) {
    const auto& set = comp.color_sets[i];
    for (VertexId v : components.members[i]) coloring[v] = set[uniform_index(rng, set.size())];
  }
  return coloring;
}

void for_each_coloring(const Components& components, const Composition& comp,
                       const std::function<bool(const std::vector<Color>&)>& visit) {
  const std::size_t n = components.component_of.size();
  std::vector<std::size_t> digit(n, 0);
  std::vector<Color> coloring(n);
  for (VertexId v = 0; v < n; ++v)
    coloring[v] = comp.color_sets[components.component_of[v]][0];
  while (true) {
    if (!visit(coloring)) return;
    VertexId v = 0;
    for (; v < n; ++v) {
      const auto& set = comp.color_sets[components.component_of[v]];
      if (++digit[v] < set.size()) {
        coloring[v] = set[digit[v]];
        break;
      }
      digit[v] = 0;
      coloring[v] = set[0];
    }
    if (v == n) return;
  }
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t composition,
                          std::uint64_t repetition) {
  return splitmix64(splitmix64(splitmix64(seed) ^ composition) ^ repetition);
}

CcResult solve_minpsc_cc(const Instance& instance, const VertexLowerBounds& ell,
                         const CcConfig& config) {
  require_minpsc(instance);
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0))
    throw InvalidParams("epsilon must lie in (0, 1)");
  const ObligatorySubgraph obl = obligatory_subgraph(instance, ell);
  const std::size_t c = obl.component_count();

  CcResult result;
  result.stats.components = c;
  if (c == 1) {
    result.solution = cost(instance, obl.edges);
    return result;
  }
  const std::size_t colors = 2 * c - 2;
  if (colors > config.pccs.max_colors)
    throw TooManyColors(std::to_string(colors) + " colors exceed the guard of " +
                        std::to_string(config.pccs.max_colors));

  const Components& comps = obl.components;
  std::vector<Composition> compositions;
  for (auto& comp : enumerate_compositions(c)) {
    bool fits = true;
    for (std::size_t i = 0; i < c && fits; ++i) fits = comp.parts[i] <= comps.members[i].size();
    if (fits) compositions.push_back(std::move(comp));
  }

  Runner runner(instance, ell, obl, config);
  runner.stats.components = c;
  runner.stats.compositions = compositions.size();

  if (config.mode == CcMode::kDeterministic) {
    long double family = 0.0L;
    for (const auto& comp : compositions) family += coloring_family_size(comps, comp);
    if (family > config.coloring_budget) {
      result.solution = solve_exact_dp(instance, config.pccs);
      result.stats = runner.stats;
      result.stats.exact_fallback = true;
      return result;
    }
    for (const auto& comp : compositions) {
      for_each_coloring(comps, comp, [&](const std::vector<Color>& coloring) {
        if (uses_every_color(comp, coloring)) runner.run(comp, coloring);
        return true;
      });
    }
  } else {
    for (std::size_t ci = 0; ci < compositions.size(); ++ci) {
      const auto& comp = compositions[ci];
      std::uint64_t t = repetition_count(config.epsilon, comp.parts);
      if (config.max_repetitions && t > *config.max_repetitions) {
        t = *config.max_repetitions;
        runner.stats.truncated = true;
      }
      for (std::uint64_t rep = 0; rep < t; ++rep) {
        std::mt19937_64 rng(stream_seed(config.seed, ci, rep));
        runner.run(comp, random_coloring(comps, comp, rng));
      }
    }
  }

  if (runner.best.cost >= kInfinity) {
    // Only reachable when every repetition missed a colorful tree.
    throw Error("color coding found no colorful connected subgraph");
  }
  result.solution = cost(instance, runner.best.edges);
  result.stats = runner.stats;
  return result;
}

}  // namespace minpsc

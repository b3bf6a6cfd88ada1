#include "minpsc/pccs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace minpsc {

namespace {

constexpr std::uint64_t kKindBase = 0;
constexpr std::uint64_t kKindSplit = 1;
constexpr std::uint64_t kKindExtend = 2;
constexpr unsigned kMaxSupportedColors = 30;
constexpr std::size_t kMaxEntries = std::size_t{1} << 31;

// Index of `mask` among the masks that contain `bit`, with that bit removed.
inline std::size_t compress(ColorMask mask, unsigned bit) {
  const ColorMask low = mask & ((ColorMask{1} << bit) - 1);
  const ColorMask high = (mask >> (bit + 1)) << bit;
  return low | high;
}

inline void prefetch(const void* p) {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_prefetch(p);
#else
  (void)p;
#endif
}

// Inverse of compress: reinserts a zero at position `bit`.
inline ColorMask expand(ColorMask packed, unsigned bit) {
  const ColorMask low = packed & ((ColorMask{1} << bit) - 1);
  const ColorMask high = (packed >> bit) << (bit + 1);
  return low | high;
}

inline std::uint64_t encode_extend(std::size_t adj_index, std::size_t child_class) {
  return (kKindExtend << 62) | (static_cast<std::uint64_t>(adj_index) << 32) |
         static_cast<std::uint32_t>(child_class);
}

}  // namespace

std::size_t PccsTable::slot(VertexId v, std::size_t cls, ColorMask mask) const {
  return base_[v] + compress(mask, coloring_[v]) * pays_[v].size() + cls;
}

PccsTable PccsTable::build(const PccsProblem& problem, const PccsOptions& options,
                           PccsReadObserver* observer) {
  const Instance& g = problem.graph;
  const std::size_t n = g.vertex_count();
  if (problem.coloring.size() != n || problem.floor.size() != n)
    throw InvalidParams("coloring and floor must have one entry per vertex");
  if (problem.color_count == 0) throw InvalidParams("color set must not be empty");
  const unsigned guard = std::min(options.max_colors, kMaxSupportedColors);
  if (problem.color_count > guard)
    throw TooManyColors(std::to_string(problem.color_count) + " colors exceed the guard of " +
                        std::to_string(guard));

  PccsTable t;
  t.graph_ = &g;
  t.coloring_.assign(problem.coloring.begin(), problem.coloring.end());
  t.floor_.assign(problem.floor.begin(), problem.floor.end());
  if (!problem.rebate.empty() && problem.rebate.size() != n)
    throw InvalidParams("rebate must be empty or have one entry per vertex");
  t.rebate_.assign(n, 0);
  std::copy(problem.rebate.begin(), problem.rebate.end(), t.rebate_.begin());
  t.colors_ = problem.color_count;

  const std::size_t half = std::size_t{1} << (t.colors_ - 1);
  t.pays_.resize(n);
  t.base_.assign(n + 1, 0);
  std::size_t total = 0;
  for (VertexId v = 0; v < n; ++v) {
    t.base_[v] = total;
    if (t.coloring_[v] >= t.colors_) continue;
    auto& pays = t.pays_[v];
    pays.push_back(t.floor_[v]);
    for (const auto& inc : g.neighbors(v)) pays.push_back(std::max(t.floor_[v], inc.w));
    std::sort(pays.begin(), pays.end());
    pays.erase(std::unique(pays.begin(), pays.end()), pays.end());
    total += half * pays.size();
    if (total > kMaxEntries) throw TooManyColors("color-subset table would be too large");
  }
  t.base_[n] = total;
  t.values_.assign(total, kInfinity);
  t.back_.assign(total, 0);
  t.best_from_.assign(total, 0);

  if (observer)
    t.fill<true>(observer);
  else
    t.fill<false>(nullptr);
  return t;
}

template <bool kObserve>
void PccsTable::fill(PccsReadObserver* observer) {
  const Instance& g = *graph_;
  const std::size_t n = g.vertex_count();
  const unsigned k = colors_;

  // Neighbors of v in ascending edge weight, and for each the first class of
  // the neighbor whose pay covers the connecting edge.
  std::vector<std::vector<std::uint32_t>> order(n);
  std::vector<std::vector<std::uint32_t>> need(n);
  for (VertexId v = 0; v < n; ++v) {
    if (coloring_[v] >= k) continue;
    const auto nbrs = g.neighbors(v);
    order[v].resize(nbrs.size());
    std::iota(order[v].begin(), order[v].end(), 0u);
    std::stable_sort(order[v].begin(), order[v].end(),
                     [&](std::uint32_t a, std::uint32_t b) { return nbrs[a].w < nbrs[b].w; });
    need[v].resize(nbrs.size(), 0);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      const VertexId u = nbrs[a].neighbor;
      if (coloring_[u] >= k) continue;
      const auto& pu = pays_[u];
      need[v][a] = static_cast<std::uint32_t>(
          std::lower_bound(pu.begin(), pu.end(), nbrs[a].w) - pu.begin());
    }
  }

  struct Candidate {
    Weight value;
    std::uint32_t adj;
    std::uint32_t cls;
  };
  std::vector<Candidate> candidates;
  std::size_t max_classes = 1;
  for (const auto& pays : pays_) max_classes = std::max(max_classes, pays.size());
  std::vector<Weight> split_acc(max_classes);

  auto compute = [&](VertexId v, ColorMask mask) {
    const auto& pays = pays_[v];
    const std::size_t ncls = pays.size();
    const Weight rebate = rebate_[v];
    const ColorMask bit = ColorMask{1} << coloring_[v];
    const std::size_t row = slot(v, 0, mask);
    Weight* val = &values_[row];
    std::uint64_t* back = &back_[row];

    if (mask == bit) {
      for (std::size_t c = 0; c < ncls; ++c) {
        val[c] = pays[c] - rebate;
        back[c] = kKindBase;
      }
    } else {
      const ColorMask rest = mask ^ bit;

      // Split at v: v's color is shared, every other color goes to exactly
      // one side. Pinning rest's lowest color to C1 visits each unordered
      // pair once. Only the minimum is kept; replay searches for the split.
      Weight* acc = split_acc.data();
      std::fill(acc, acc + ncls, kInfinity);
      // Rows of v are indexed by the mask without col(v); work in that space.
      const ColorMask packed = static_cast<ColorMask>(compress(rest, coloring_[v]));
      const ColorMask low = packed & (~packed + 1);
      const ColorMask others = packed ^ low;
      const Weight* rows = &values_[base_[v]];
      for (ColorMask s = others;; s = (s - 1) & others) {
        const ColorMask x = s | low;
        if (x != packed) {
          const ColorMask y = packed ^ x;
          if constexpr (kObserve) {
            observer->on_read(mask, expand(x, coloring_[v]) | bit);
            observer->on_read(mask, expand(y, coloring_[v]) | bit);
          }
          const ColorMask next = ((s - 1) & others) | low;
          prefetch(rows + std::size_t(next) * ncls);
          prefetch(rows + std::size_t(packed ^ next) * ncls);
          const Weight* a = rows + std::size_t(x) * ncls;
          const Weight* b = rows + std::size_t(y) * ncls;
          for (std::size_t c = 0; c < ncls; ++c) acc[c] = std::min(acc[c], a[c] + b[c]);
        }
        if (s == 0) break;
      }
      for (std::size_t c = 0; c < ncls; ++c) {
        if (acc[c] >= kInfinity) continue;
        val[c] = acc[c] - (pays[c] - rebate);
        back[c] = kKindSplit << 62;
      }

      // Extend: v hangs off a neighbor u rooted on the remaining colors.
      const auto nbrs = g.neighbors(v);
      candidates.clear();
      for (std::uint32_t a : order[v]) {
        const VertexId u = nbrs[a].neighbor;
        if (coloring_[u] >= k || !(rest & (ColorMask{1} << coloring_[u]))) {
          candidates.push_back({kInfinity, a, 0});
          continue;
        }
        if constexpr (kObserve) observer->on_read(mask, rest);
        const std::uint32_t cls = best_from_[slot(u, need[v][a], rest)];
        candidates.push_back({values_[slot(u, cls, rest)], a, cls});
      }
      Candidate running{kInfinity, 0, 0};
      std::size_t next = 0;
      for (std::size_t c = 0; c < ncls; ++c) {
        while (next < candidates.size() && nbrs[candidates[next].adj].w <= pays[c]) {
          if (candidates[next].value < running.value) running = candidates[next];
          ++next;
        }
        if (running.value >= kInfinity) continue;
        const Weight cand = sat_add(running.value, pays[c] - rebate);
        if (cand < val[c]) {
          val[c] = cand;
          back[c] = encode_extend(running.adj, running.cls);
        }
      }
    }

    std::uint32_t* best = &best_from_[row];
    best[ncls - 1] = static_cast<std::uint32_t>(ncls - 1);
    for (std::size_t c = ncls - 1; c-- > 0;)
      best[c] = val[c] <= val[best[c + 1]] ? static_cast<std::uint32_t>(c) : best[c + 1];
  };

  // Entries of one popcount layer only read lower layers, so within a layer
  // the order is free; sweeping one vertex at a time keeps its rows cached.
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (unsigned size = 1; size <= k; ++size) {
    for (VertexId v = 0; v < n; ++v) {
      if (coloring_[v] >= k) continue;
      const std::uint64_t bit = std::uint64_t{1} << coloring_[v];
      // Gosper's hack: all masks with `size` bits, ascending.
      std::uint64_t m = (std::uint64_t{1} << size) - 1;
      while (m < limit) {
        if (m & bit) compute(v, static_cast<ColorMask>(m));
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
      }
    }
  }
}

std::size_t PccsTable::class_of_anchor(VertexId v, VertexId anchor) const {
  if (anchor == v) return 0;
  const EdgeId e = graph_->find_edge(v, anchor);
  if (e == Instance::kNoEdge)
    throw InvalidParams("anchor " + std::to_string(anchor) + " is not a neighbor of " +
                        std::to_string(v));
  const Weight pay = std::max(floor_[v], graph_->edge(e).w);
  const auto& pays = pays_[v];
  return static_cast<std::size_t>(std::lower_bound(pays.begin(), pays.end(), pay) - pays.begin());
}

Weight PccsTable::value(VertexId v, VertexId anchor, ColorMask mask) const {
  if (v >= graph_->vertex_count()) throw InvalidParams("vertex out of range");
  if (coloring_[v] >= colors_ || (mask & ~full_mask()) != 0) return kInfinity;
  if (!(mask & (ColorMask{1} << coloring_[v]))) return kInfinity;
  return values_[slot(v, class_of_anchor(v, anchor), mask)];
}

ColorMask PccsTable::find_split(VertexId v, std::size_t cls, ColorMask mask) const {
  // Same enumeration order as fill, so the first match is the split fill saw.
  const Weight target = values_[slot(v, cls, mask)] + (pays_[v][cls] - rebate_[v]);
  const ColorMask bit = ColorMask{1} << coloring_[v];
  const ColorMask rest = mask ^ bit;
  const ColorMask low = rest & (~rest + 1);
  const ColorMask others = rest ^ low;
  for (ColorMask s = others;; s = (s - 1) & others) {
    const ColorMask sub = s | low;
    if (sub != rest) {
      const Weight a = values_[slot(v, cls, sub | bit)];
      const Weight b = values_[slot(v, cls, (rest ^ sub) | bit)];
      if (a < kInfinity && b < kInfinity && a + b == target) return sub | bit;
    }
    if (s == 0) break;
  }
  throw CorruptTable("no split reproduces the stored value");
}

Weight PccsTable::replay(VertexId v, std::size_t cls, ColorMask mask, PccsTree& out) const {
  const std::size_t s = slot(v, cls, mask);
  const Weight stored = values_[s];
  if (stored >= kInfinity) throw CorruptTable("replay reached an infeasible entry");
  const Weight pay = pays_[v][cls] - rebate_[v];
  const std::uint64_t code = back_[s];
  const ColorMask bit = ColorMask{1} << coloring_[v];
  Weight replayed = 0;
  switch (code >> 62) {
    case kKindBase:
      if (mask != bit) throw CorruptTable("base entry on a multi-color subset");
      out.vertices.push_back(v);
      replayed = pay;
      break;
    case kKindSplit: {
      const ColorMask c1 = find_split(v, cls, mask);
      const ColorMask c2 = (mask ^ c1) | bit;
      replayed = replay(v, cls, c1, out) + replay(v, cls, c2, out) - pay;
      break;
    }
    case kKindExtend: {
      const std::size_t adj = (code >> 32) & 0x3fffffffu;
      const std::size_t child_cls = code & 0xffffffffu;
      const auto nbrs = graph_->neighbors(v);
      if (adj >= nbrs.size()) throw CorruptTable("invalid extend back-pointer");
      const VertexId u = nbrs[adj].neighbor;
      if (child_cls >= pays_[u].size()) throw CorruptTable("invalid child class");
      out.edges.push_back(nbrs[adj].edge);
      out.vertices.push_back(v);
      replayed = pay + replay(u, child_cls, mask ^ bit, out);
      break;
    }
    default:
      throw CorruptTable("unknown back-pointer kind");
  }
  if (replayed != stored)
    throw CorruptTable("replayed value " + std::to_string(replayed) +
                       " disagrees with stored " + std::to_string(stored));
  return replayed;
}

PccsTree PccsTable::reconstruct_class(VertexId v, std::size_t cls, ColorMask mask) const {
  PccsTree tree;
  tree.value = replay(v, cls, mask, tree);
  std::sort(tree.vertices.begin(), tree.vertices.end());
  tree.vertices.erase(std::unique(tree.vertices.begin(), tree.vertices.end()),
                      tree.vertices.end());
  std::sort(tree.edges.begin(), tree.edges.end());

  if (tree.vertices.size() != static_cast<std::size_t>(std::popcount(mask)) ||
      tree.edges.size() + 1 != tree.vertices.size())
    throw CorruptTable("witness is not a colorful tree");
  ColorMask seen = 0;
  for (VertexId x : tree.vertices) seen |= ColorMask{1} << coloring_[x];
  if (seen != mask) throw CorruptTable("witness colors do not match the subset");

  std::vector<Weight> pay(graph_->vertex_count(), 0);
  for (VertexId x : tree.vertices) pay[x] = floor_[x];
  for (EdgeId e : tree.edges) {
    const Edge& edge = graph_->edge(e);
    pay[edge.u] = std::max(pay[edge.u], edge.w);
    pay[edge.v] = std::max(pay[edge.v], edge.w);
  }
  if (pay[v] > pays_[v][cls]) throw CorruptTable("root pays more than its anchor allows");
  for (VertexId x : tree.vertices) {
    tree.objective += pay[x];
    tree.rebate += rebate_[x];
  }
  return tree;
}

PccsTree PccsTable::reconstruct(VertexId v, VertexId anchor, ColorMask mask) const {
  if (value(v, anchor, mask) >= kInfinity)
    throw InvalidParams("cannot reconstruct an infeasible entry");
  return reconstruct_class(v, class_of_anchor(v, anchor), mask);
}

std::optional<PccsTree> PccsTable::best() const {
  const ColorMask full = full_mask();
  Weight best_value = kInfinity;
  VertexId best_v = 0;
  std::size_t best_cls = 0;
  for (VertexId v = 0; v < graph_->vertex_count(); ++v) {
    if (coloring_[v] >= colors_) continue;
    for (std::size_t c = 0; c < pays_[v].size(); ++c) {
      const Weight x = values_[slot(v, c, full)];
      if (x < best_value) {
        best_value = x;
        best_v = v;
        best_cls = c;
      }
    }
  }
  if (best_value >= kInfinity) return std::nullopt;
  PccsTree tree = reconstruct_class(best_v, best_cls, full);
  if (tree.objective - tree.rebate != tree.value)
    throw CorruptTable("optimal witness objective " + std::to_string(tree.objective) +
                       " differs from table value " + std::to_string(tree.value));
  return tree;
}

std::optional<PccsTree> solve_pccs(const PccsProblem& problem, const PccsOptions& options) {
  return PccsTable::build(problem, options).best();
}

}  // namespace minpsc

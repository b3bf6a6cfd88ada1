#include "minpsc/kernel.hpp"

#include <algorithm>
#include <numeric>

#include "minpsc/bounds.hpp"
#include "minpsc/color_coding.hpp"
#include "minpsc/exact.hpp"

namespace minpsc {

namespace {

Weight full_pay(Weight ell, Weight left, Weight right) {
  return std::max({ell, left, right});
}

// w[j] is the weight of {v_j, v_{j+1}}, ell[j] the annotation of v_j.
Weight beta_of(const std::vector<Weight>& w, const std::vector<Weight>& ell, std::size_t j) {
  const Weight left = w[j] - std::max(ell[j], w[j - 1]);
  const Weight right = w[j] - std::max(ell[j + 1], w[j + 1]);
  return std::max<Weight>(0, left) + std::max<Weight>(0, right);
}

Representative make_representative(const std::vector<VertexId>& verts,
                                   const std::vector<Weight>& w,
                                   const std::vector<Weight>& ell) {
  const std::size_t h = w.size();
  if (h <= 8) throw PathTooShort("representative needs more than 8 path edges, got " +
                                 std::to_string(h));
  Representative rep;

  Weight best = -1;
  for (std::size_t j = 1; j + 1 < h; ++j) best = std::max(best, beta_of(w, ell, j));
  rep.i = 0;
  for (std::size_t j = 2; j + 3 <= h; ++j) {
    if (beta_of(w, ell, j) == best) {
      rep.i = j;
      break;
    }
  }
  if (rep.i == 0) rep.i = beta_of(w, ell, 1) == best ? 1 : h - 2;
  const std::size_t i = rep.i;

  auto keep = [&](std::size_t idx) {
    rep.vertices.push_back({false, verts[idx], idx, ell[idx]});
  };
  auto introduce = [&](Weight value) { rep.vertices.push_back({true, 0, 0, value}); };

  keep(0);
  keep(1);
  rep.weights.push_back(w[0]);
  if (i == 1) {
    keep(2);
    rep.weights.push_back(w[1]);
  } else {
    introduce(std::max(w[1], w[i - 1]));
    keep(i);
    keep(i + 1);
    rep.weights.push_back(w[1]);
    rep.weights.push_back(w[i - 1]);
    rep.weights.push_back(w[i]);
  }
  if (i == h - 2) {
    keep(h);
    rep.weights.push_back(w[h - 1]);
  } else {
    introduce(std::max(w[i + 1], w[h - 2]));
    keep(h - 1);
    keep(h);
    rep.weights.push_back(w[i + 1]);
    rep.weights.push_back(w[h - 2]);
    rep.weights.push_back(w[h - 1]);
  }

  std::vector<char> kept(h + 1, 0);
  for (const auto& rv : rep.vertices) {
    if (rv.introduced)
      rep.adj -= rv.ell;
    else
      kept[rv.index] = 1;
  }
  for (std::size_t j = 1; j < h; ++j) {
    if (kept[j]) continue;
    rep.deleted.push_back(j);
    rep.adj += full_pay(ell[j], w[j - 1], w[j]);
  }
  return rep;
}

// Inner cost of a degree-two path when every edge but `omitted` is kept.
Weight inner_cost(const std::vector<Weight>& w, const std::vector<Weight>& ell,
                  std::size_t omitted) {
  const std::size_t h = w.size();
  Weight total = 0;
  for (std::size_t j = 1; j < h; ++j) {
    const Weight left = j - 1 == omitted ? 0 : w[j - 1];
    const Weight right = j == omitted ? 0 : w[j];
    total += full_pay(ell[j], left, right);
  }
  return total;
}

struct WorkPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

// Mutable graph the rules operate on. Edges are never renumbered; deleted
// ones stay in the table and are skipped lazily in adjacency lists.
class Reducer {
 public:
  Reducer(const AnnotatedInstance& ai, bool logging)
      : logging_(logging),
        edges_(ai.graph.edges()),
        edge_alive_(edges_.size(), 1),
        adj_(ai.graph.vertex_count()),
        deg_(ai.graph.vertex_count(), 0),
        ell_(ai.ell),
        alive_(ai.graph.vertex_count(), 1),
        alive_count_(ai.graph.vertex_count()),
        offset_(ai.offset) {
    if (ell_.size() != alive_.size()) throw InvalidParams("annotation size mismatch");
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      adj_[edges_[e].u].push_back(e);
      adj_[edges_[e].v].push_back(e);
      ++deg_[edges_[e].u];
      ++deg_[edges_[e].v];
    }
  }

  std::size_t degree(VertexId v) const { return deg_[v]; }
  std::size_t alive_count() const { return alive_count_; }

  void rr1() {
    std::vector<VertexId> work;
    for (VertexId v = 0; v < alive_.size(); ++v)
      if (alive_[v] && deg_[v] == 1) work.push_back(v);
    while (!work.empty() && alive_count_ > 1) {
      const VertexId v = work.back();
      work.pop_back();
      if (!alive_[v] || deg_[v] != 1) continue;
      const EdgeId e = first_alive_edge(v);
      const VertexId u = edges_[e].other(v);
      const Weight w = edges_[e].w;
      ell_[u] = std::max(ell_[u], w);
      offset_ += std::max(w, ell_[v]);
      kill_edge(e);
      kill_vertex(v);
      ++rr1_count;
      if (logging_) {
        UndoEntry entry;
        entry.kind = UndoEntry::Kind::kRr1;
        entry.edges = {e};
        log.push_back(std::move(entry));
      }
      if (deg_[u] == 1) work.push_back(u);
    }
    if (alive_count_ == 1) {
      const VertexId v = static_cast<VertexId>(
          std::find(alive_.begin(), alive_.end(), 1) - alive_.begin());
      offset_ += ell_[v];
      ell_[v] = 0;
      if (logging_) {
        UndoEntry entry;
        entry.kind = UndoEntry::Kind::kCollapse;
        log.push_back(std::move(entry));
      }
    }
  }

  bool is_pure_cycle() const {
    if (alive_count_ < 3) return false;
    for (VertexId v = 0; v < alive_.size(); ++v)
      if (alive_[v] && deg_[v] != 2) return false;
    return true;
  }

  // Requires a connected pure cycle. Returns the kept edges and their cost.
  CycleSolution best_cycle_cut() {
    VertexId start = 0;
    while (!alive_[start]) ++start;
    std::vector<VertexId> order{start};
    std::vector<EdgeId> ring;
    EdgeId prev = kNone;
    VertexId cur = start;
    do {
      EdgeId next = kNone;
      for (EdgeId e : adj_[cur]) {
        if (edge_alive_[e] && e != prev) {
          next = e;
          break;
        }
      }
      ring.push_back(next);
      if (next == kNone) throw NotACycle("graph is not a single cycle");
      prev = next;
      cur = edges_[next].other(cur);
      if (cur != start) order.push_back(cur);
    } while (cur != start && ring.size() <= alive_count_);
    if (order.size() != alive_count_ || ring.size() != alive_count_)
      throw NotACycle("graph is not a single cycle");

    // ring[t] joins order[t] and order[t+1].
    const std::size_t k = ring.size();
    auto wt = [&](std::size_t t) { return edges_[ring[t % k]].w; };
    Weight full = 0;
    for (std::size_t t = 0; t < k; ++t)
      full += full_pay(ell_[order[t]], wt(t + k - 1), wt(t));
    Weight best = kInfinity;
    EdgeId cut = kNone;
    for (std::size_t t = 0; t < k; ++t) {
      const VertexId a = order[t];
      const VertexId b = order[(t + 1) % k];
      const Weight before = full_pay(ell_[a], wt(t + k - 1), wt(t)) +
                            full_pay(ell_[b], wt(t), wt(t + 1));
      const Weight after = std::max(ell_[a], wt(t + k - 1)) + std::max(ell_[b], wt(t + 1));
      const Weight value = full - before + after;
      if (value < best || (value == best && ring[t] < cut)) {
        best = value;
        cut = ring[t];
      }
    }
    CycleSolution sol;
    sol.cost = best;
    for (EdgeId e : ring)
      if (e != cut) sol.edges.push_back(e);
    std::sort(sol.edges.begin(), sol.edges.end());
    return sol;
  }

  void close_cycle() {
    const CycleSolution sol = best_cycle_cut();
    offset_ += sol.cost;
    VertexId keep = 0;
    while (!alive_[keep]) ++keep;
    for (EdgeId e = 0; e < edges_.size(); ++e)
      if (edge_alive_[e]) kill_edge(e);
    for (VertexId v = keep + 1; v < alive_.size(); ++v)
      if (alive_[v]) kill_vertex(v);
    ell_[keep] = 0;
    cycle = true;
    if (logging_) {
      UndoEntry entry;
      entry.kind = UndoEntry::Kind::kCycle;
      entry.edges = sol.edges;
      log.push_back(std::move(entry));
    }
  }

  std::vector<WorkPath> paths() const {
    std::vector<WorkPath> out;
    std::vector<char> inner_seen(alive_.size(), 0);
    for (VertexId x = 0; x < alive_.size(); ++x) {
      if (!alive_[x] || deg_[x] < 3) continue;
      for (EdgeId first : adj_[x]) {
        if (!edge_alive_[first]) continue;
        const VertexId y = edges_[first].other(x);
        if (deg_[y] != 2 || inner_seen[y]) continue;
        WorkPath path;
        path.vertices.push_back(x);
        EdgeId e = first;
        VertexId cur = x;
        while (true) {
          path.edges.push_back(e);
          cur = edges_[e].other(cur);
          path.vertices.push_back(cur);
          if (deg_[cur] != 2) break;
          inner_seen[cur] = 1;
          e = other_alive_edge(cur, e);
        }
        out.push_back(std::move(path));
      }
    }
    return out;
  }

  void rr2() {
    for (VertexId v = 0; v < alive_.size(); ++v)
      if (alive_[v] && deg_[v] < 2)
        throw InvalidParams("RR2 needs minimum degree two; apply RR1 first");
    for (const WorkPath& path : paths()) {
      if (path.edges.size() <= 8) continue;
      replace(path);
    }
  }

  Representative representative_of(const WorkPath& path) const {
    std::vector<Weight> w;
    std::vector<Weight> ell;
    for (EdgeId e : path.edges) w.push_back(edges_[e].w);
    for (VertexId v : path.vertices) ell.push_back(ell_[v]);
    return make_representative(path.vertices, w, ell);
  }

  void replace(const WorkPath& path) {
    const Representative rep = representative_of(path);
    const std::size_t h = path.edges.size();
    UndoEntry entry;
    entry.kind = UndoEntry::Kind::kRr2;
    entry.path_edges = path.edges;
    entry.path_vertices = path.vertices;
    for (VertexId v : path.vertices) entry.path_ell.push_back(ell_[v]);
    entry.chosen = rep.i;

    std::vector<char> keep_edge(h, 0);
    keep_edge[0] = keep_edge[rep.i] = keep_edge[h - 1] = 1;
    for (std::size_t j = 0; j < h; ++j)
      if (!keep_edge[j]) kill_edge(path.edges[j]);
    for (std::size_t j : rep.deleted) kill_vertex(path.vertices[j]);

    std::vector<VertexId> ids;
    for (const RepVertex& rv : rep.vertices) {
      if (rv.introduced) {
        ids.push_back(add_vertex(rv.ell));
      } else {
        ids.push_back(rv.vertex);
      }
    }
    for (std::size_t k = 0; k + 1 < rep.vertices.size(); ++k) {
      const RepVertex& a = rep.vertices[k];
      const RepVertex& b = rep.vertices[k + 1];
      if (!a.introduced && !b.introduced && b.index == a.index + 1) {
        entry.rep_edges.push_back(path.edges[a.index]);
      } else {
        entry.rep_edges.push_back(add_edge(ids[k], ids[k + 1], rep.weights[k]));
      }
    }
    offset_ += rep.adj;
    ++rr2_count;
    if (logging_) log.push_back(std::move(entry));
  }

  // Compacts the live graph. Vertex and edge ids keep their relative order.
  AnnotatedInstance export_instance(std::vector<EdgeId>* edge_origin) const {
    std::vector<VertexId> index(alive_.size(), 0);
    std::vector<Weight> ell;
    VertexId next = 0;
    for (VertexId v = 0; v < alive_.size(); ++v) {
      if (!alive_[v]) continue;
      index[v] = next++;
      ell.push_back(ell_[v]);
    }
    std::vector<Edge> edges;
    if (edge_origin) edge_origin->clear();
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      if (!edge_alive_[e]) continue;
      edges.push_back({index[edges_[e].u], index[edges_[e].v], edges_[e].w});
      if (edge_origin) edge_origin->push_back(e);
    }
    AnnotatedInstance out{Instance(next, std::move(edges)), std::move(ell), offset_};
    return out;
  }

  const std::vector<Edge>& edge_table() const { return edges_; }

  std::vector<UndoEntry> log;
  std::size_t rr1_count = 0;
  std::size_t rr2_count = 0;
  bool cycle = false;

 private:
  static constexpr EdgeId kNone = Instance::kNoEdge;

  EdgeId first_alive_edge(VertexId v) {
    auto& list = adj_[v];
    std::erase_if(list, [&](EdgeId e) { return !edge_alive_[e]; });
    return list.front();
  }

  EdgeId other_alive_edge(VertexId v, EdgeId not_this) const {
    for (EdgeId e : adj_[v])
      if (edge_alive_[e] && e != not_this) return e;
    throw InvalidParams("degree-two vertex lost its second edge");
  }

  void kill_edge(EdgeId e) {
    edge_alive_[e] = 0;
    --deg_[edges_[e].u];
    --deg_[edges_[e].v];
  }

  void kill_vertex(VertexId v) {
    alive_[v] = 0;
    --alive_count_;
  }

  VertexId add_vertex(Weight ell) {
    const auto v = static_cast<VertexId>(alive_.size());
    alive_.push_back(1);
    ++alive_count_;
    ell_.push_back(ell);
    deg_.push_back(0);
    adj_.emplace_back();
    return v;
  }

  EdgeId add_edge(VertexId u, VertexId v, Weight w) {
    const auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, w});
    edge_alive_.push_back(1);
    adj_[u].push_back(e);
    adj_[v].push_back(e);
    ++deg_[u];
    ++deg_[v];
    return e;
  }

  bool logging_;
  std::vector<Edge> edges_;
  std::vector<char> edge_alive_;
  std::vector<std::vector<EdgeId>> adj_;
  std::vector<std::size_t> deg_;
  std::vector<Weight> ell_;
  std::vector<char> alive_;
  std::size_t alive_count_;
  Weight offset_;
};

WorkPath to_work_path(const AnnotatedInstance& ai, const DegreeTwoPath& path) {
  WorkPath out;
  out.vertices = path.vertices;
  for (std::size_t j = 0; j + 1 < path.vertices.size(); ++j) {
    const EdgeId e = ai.graph.find_edge(path.vertices[j], path.vertices[j + 1]);
    if (e == Instance::kNoEdge) throw InvalidParams("path vertices are not adjacent");
    out.edges.push_back(e);
  }
  return out;
}

void require_annotations(const AnnotatedInstance& ai) {
  if (ai.ell.size() != ai.graph.vertex_count())
    throw InvalidParams("annotation size mismatch");
}

}  // namespace

AnnotatedInstance AnnotatedInstance::plain(const Instance& instance) {
  return {instance, std::vector<Weight>(instance.vertex_count(), 0), 0};
}

Weight annotated_solution_cost(const AnnotatedInstance& ai, std::span<const EdgeId> edges) {
  require_annotations(ai);
  if (!is_connected_spanning(ai.graph, edges))
    throw DisconnectedSelection("edge set does not connect all vertices");
  const EdgeSet sorted = normalize_edge_set(ai.graph, edges);
  return annotated_cost(ai.graph, sorted, ai.ell);
}

std::vector<DegreeTwoPath> degree_two_paths(const AnnotatedInstance& ai) {
  std::vector<DegreeTwoPath> out;
  for (auto& p : Reducer(ai, false).paths()) out.push_back({std::move(p.vertices)});
  return out;
}

Weight beta(const AnnotatedInstance& ai, const DegreeTwoPath& path, std::size_t j) {
  require_annotations(ai);
  const WorkPath wp = to_work_path(ai, path);
  const std::size_t h = wp.edges.size();
  if (j < 1 || j + 2 > h)
    throw IndexOutOfRange("beta needs 1 <= j <= h - 2; j = " + std::to_string(j) +
                          ", h = " + std::to_string(h));
  std::vector<Weight> w;
  std::vector<Weight> ell;
  for (EdgeId e : wp.edges) w.push_back(ai.graph.edge(e).w);
  for (VertexId v : wp.vertices) ell.push_back(ai.ell[v]);
  return beta_of(w, ell, j);
}

Representative representative(const AnnotatedInstance& ai, const DegreeTwoPath& path) {
  require_annotations(ai);
  return Reducer(ai, false).representative_of(to_work_path(ai, path));
}

AnnotatedInstance apply_rr1(const AnnotatedInstance& ai) {
  Reducer r(ai, false);
  r.rr1();
  return r.export_instance(nullptr);
}

AnnotatedInstance apply_rr2(const AnnotatedInstance& ai) {
  Reducer r(ai, false);
  r.rr2();
  return r.export_instance(nullptr);
}

CycleSolution solve_cycle(const AnnotatedInstance& ai) {
  require_annotations(ai);
  Reducer r(ai, false);
  if (!r.is_pure_cycle() || !is_connected(ai.graph))
    throw NotACycle("graph is not a single cycle");
  return r.best_cycle_cut();
}

AnnotatedInstance deannotate(const AnnotatedInstance& ai) {
  require_annotations(ai);
  const std::size_t n = ai.graph.vertex_count();
  std::vector<Edge> edges = ai.graph.edges();
  Weight offset = ai.offset;
  VertexId next = static_cast<VertexId>(n);
  for (VertexId v = 0; v < n; ++v) {
    if (ai.ell[v] <= 0) continue;
    edges.push_back({v, next++, ai.ell[v]});
    offset -= ai.ell[v];
  }
  return {Instance(next, std::move(edges)), std::vector<Weight>(next, 0), offset};
}

bool KernelStats::within_bounds() const {
  return std::int64_t(annotated_vertices) <= annotated_vertex_bound() &&
         std::int64_t(annotated_edges) <= annotated_edge_bound() &&
         std::int64_t(reduced_vertices) <= vertex_bound() &&
         std::int64_t(reduced_edges) <= edge_bound();
}

KernelResult kernelize(const Instance& instance) {
  if (!is_connected(instance)) throw DisconnectedInstance("kernelization needs a connected graph");
  KernelResult out;
  out.stats.n = instance.vertex_count();
  out.stats.m = instance.edge_count();
  out.stats.g = instance.edge_count() + 1 - instance.vertex_count();

  Reducer r(AnnotatedInstance::plain(instance), true);
  r.rr1();
  if (r.is_pure_cycle())
    r.close_cycle();
  else if (r.alive_count() > 1)
    r.rr2();

  std::vector<EdgeId> origin;
  const AnnotatedInstance annotated = r.export_instance(&origin);
  out.stats.annotated_vertices = annotated.graph.vertex_count();
  out.stats.annotated_edges = annotated.graph.edge_count();
  out.stats.rr1 = r.rr1_count;
  out.stats.rr2 = r.rr2_count;
  out.stats.cycle = r.cycle;

  AnnotatedInstance plain = deannotate(annotated);
  out.reduced = std::move(plain.graph);
  out.offset = plain.offset;
  out.stats.reduced_vertices = out.reduced.vertex_count();
  out.stats.reduced_edges = out.reduced.edge_count();

  out.log.original = instance;
  out.log.edges = r.edge_table();
  out.log.entries = std::move(r.log);
  out.log.reduced_edge_origin = std::move(origin);
  out.log.reduced_edge_origin.resize(out.reduced.edge_count(), Instance::kNoEdge);
  return out;
}

Solution lift(const UndoLog& log, std::span<const EdgeId> reduced_solution) {
  std::vector<char> selected(log.edges.size(), 0);
  for (EdgeId e : reduced_solution) {
    if (e >= log.reduced_edge_origin.size())
      throw InconsistentLog("reduced edge id " + std::to_string(e) + " out of range");
    const EdgeId origin = log.reduced_edge_origin[e];
    if (origin != Instance::kNoEdge) selected[origin] = 1;
  }

  for (auto it = log.entries.rbegin(); it != log.entries.rend(); ++it) {
    const UndoEntry& entry = *it;
    switch (entry.kind) {
      case UndoEntry::Kind::kCollapse:
        break;
      case UndoEntry::Kind::kRr1:
      case UndoEntry::Kind::kCycle:
        for (EdgeId e : entry.edges) selected[e] = 1;
        break;
      case UndoEntry::Kind::kRr2: {
        std::vector<std::size_t> missing;
        for (std::size_t k = 0; k < entry.rep_edges.size(); ++k)
          if (!selected[entry.rep_edges[k]]) missing.push_back(k);
        if (missing.size() > 1)
          throw InconsistentLog("reduced solution omits two edges of one path");
        const std::size_t h = entry.path_edges.size();
        std::size_t omit = h;  // none
        if (missing.size() == 1) {
          if (missing[0] == 0) {
            omit = 0;
          } else if (missing[0] + 1 == entry.rep_edges.size()) {
            omit = h - 1;
          } else {
            std::vector<Weight> w;
            for (EdgeId e : entry.path_edges) w.push_back(log.edges[e].w);
            omit = entry.chosen;
            Weight best = inner_cost(w, entry.path_ell, omit);
            for (std::size_t j = 1; j + 1 < h; ++j) {
              const Weight c = inner_cost(w, entry.path_ell, j);
              if (c < best) {
                best = c;
                omit = j;
              }
            }
          }
        }
        for (EdgeId e : entry.rep_edges) selected[e] = 0;
        for (std::size_t j = 0; j < h; ++j) selected[entry.path_edges[j]] = j != omit;
        break;
      }
    }
  }

  EdgeSet edges;
  for (EdgeId e = 0; e < log.original.edge_count(); ++e)
    if (selected[e]) edges.push_back(e);
  if (!is_connected_spanning(log.original, edges))
    throw InconsistentLog("lifted selection does not span the input");
  return cost(log.original, edges);
}

namespace {

constexpr std::size_t kDirectDpVertices = 14;
constexpr long double kTreeEnumerationBudget = 2e5L;
constexpr std::size_t kColorCodingColors = 10;

}  // namespace

KernelSolveResult solve_via_kernel(const Instance& instance) {
  require_minpsc(instance);
  KernelResult kr = kernelize(instance);
  KernelSolveResult out;
  out.stats = kr.stats;
  out.offset = kr.offset;

  const Instance& reduced = kr.reduced;
  const std::size_t n = reduced.vertex_count();
  Solution sol;
  if (n <= 1) {
    sol = cost(reduced, {});
    out.reduced_solver = "trivial";
  } else if (n <= kDirectDpVertices) {
    sol = solve_exact_dp(reduced);
    out.reduced_solver = "exact";
  } else if (spanning_tree_count(reduced) <= kTreeEnumerationBudget) {
    BruteForceTreeOptions options;
    options.max_trees = kTreeEnumerationBudget;
    sol = brute_force_tree(reduced, options);
    out.reduced_solver = "brute-tree";
  } else {
    const VertexLowerBounds ell = trivial_lower_bounds(reduced);
    const std::size_t c = obligatory_subgraph(reduced, ell).component_count();
    if (c == 1 || 2 * c - 2 <= kColorCodingColors) {
      CcConfig config;
      config.mode = CcMode::kDeterministic;
      sol = solve_minpsc_cc(reduced, ell, config).solution;
      out.reduced_solver = "cc";
    } else {
      sol = solve_exact_dp(reduced);
      out.reduced_solver = "exact";
    }
  }
  out.reduced_cost = sol.total_cost;
  out.solution = lift(kr.log, sol.edges);
  if (out.solution.total_cost != sol.total_cost + kr.offset)
    throw InconsistentLog("lifted cost " + std::to_string(out.solution.total_cost) +
                          " differs from reduced cost plus offset " +
                          std::to_string(sol.total_cost + kr.offset));
  return out;
}

}  // namespace minpsc

// minpsc: solve, generate, kernelize, verify and benchmark MinPSC instances.
//
// Exit codes: 0 success, 1 other error, 2 parse error, 3 guard exceeded,
// 4 infeasible solution.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <clocale>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "minpsc/bounds.hpp"
#include "minpsc/errors.hpp"
#include "minpsc/generators.hpp"
#include "minpsc/graph.hpp"
#include "minpsc/hardness.hpp"
#include "minpsc/io.hpp"
#include "minpsc/kernel.hpp"
#include "minpsc/solve.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInfeasible = 4;

struct GlobalFlags {
  std::uint64_t seed = 1;
  std::string format = "text";
  bool quiet = false;

  bool json() const { return format == "json"; }
};

void emit(const GlobalFlags& flags, const std::string& text) {
  if (!flags.quiet) std::cout << text;
}

std::string fixed3(double x) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out.setf(std::ios::fixed);
  out.precision(3);
  out << x;
  return out.str();
}

json edges_json(const minpsc::Instance& inst, const minpsc::EdgeSet& edges) {
  json out = json::array();
  for (minpsc::EdgeId e : edges) {
    const auto& edge = inst.edge(e);
    out.push_back({edge.u, edge.v, edge.w});
  }
  return out;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string path;
  std::string algo = "auto";
  double epsilon = 0.1;
  bool deterministic = false;
  std::optional<std::uint64_t> max_repetitions;
  std::string out;
};

int run_solve(const SolveArgs& args, const GlobalFlags& flags) {
  const minpsc::ParsedInstance parsed = minpsc::read_instance_file(args.path);
  const minpsc::Instance& inst = parsed.instance;

  minpsc::SolveOptions options;
  options.algo = minpsc::parse_algorithm(args.algo);
  options.seed = flags.seed;
  options.epsilon = args.epsilon;
  options.deterministic = args.deterministic;
  options.max_repetitions = args.max_repetitions;
  if (parsed.annotations) options.lower_bounds = *parsed.annotations;

  const minpsc::SolveReport report = minpsc::solve(inst, options);
  const minpsc::Solution& sol = report.solution;
  if (!args.out.empty())
    minpsc::write_text_file(args.out, minpsc::render_solution(inst, sol.edges));

  if (flags.json()) {
    json j;
    j["algo"] = minpsc::algorithm_name(report.used);
    j["n"] = inst.vertex_count();
    j["m"] = inst.edge_count();
    j["c"] = report.c;
    j["g"] = report.g;
    j["total"] = sol.total_cost;
    j["margin"] = report.margin;
    j["time_ms"] = report.time_ms;
    j["edges"] = edges_json(inst, sol.edges);
    j["per_vertex_cost"] = sol.per_vertex_cost;
    j["notes"] = report.notes;
    emit(flags, j.dump(2) + "\n");
    return 0;
  }

  std::ostringstream out;
  out << "algo     " << minpsc::algorithm_name(report.used) << "\n";
  out << "n m      " << inst.vertex_count() << " " << inst.edge_count() << "\n";
  out << "c g      " << report.c << " " << report.g << "\n";
  out << "total    " << sol.total_cost << "\n";
  out << "margin   " << report.margin << "\n";
  out << "time_ms  " << fixed3(report.time_ms) << "\n";
  for (const auto& note : report.notes) out << "note     " << note << "\n";
  out << "edges\n";
  for (minpsc::EdgeId e : sol.edges) {
    const auto& edge = inst.edge(e);
    out << "  " << edge.u << " " << edge.v << " w=" << edge.w << "\n";
  }
  out << "per-vertex cost\n";
  for (minpsc::VertexId v = 0; v < inst.vertex_count(); ++v)
    out << "  " << v << " " << sol.per_vertex_cost[v] << "\n";
  emit(flags, out.str());
  return 0;
}

// ------------------------------------------------------------- generate

struct GenerateArgs {
  std::string out;
  minpsc::GridParams grid;
  std::string grid_weights = "uniform";
  minpsc::TreePlusParams tree;
  minpsc::GeometricParams geo;
  std::size_t universe = 0;
  std::string sets;
};

void write_or_print(const std::string& out, const std::string& text, const GlobalFlags& flags) {
  if (out.empty())
    emit(flags, text);
  else
    minpsc::write_text_file(out, text);
}

int run_generate(const std::string& kind, GenerateArgs args, const GlobalFlags& flags) {
  minpsc::Instance inst(1, {});
  std::ostringstream header;
  if (kind == "grid") {
    if (args.grid_weights == "uniform")
      args.grid.weights = minpsc::GridWeights::kUniform;
    else if (args.grid_weights == "perturbed")
      args.grid.weights = minpsc::GridWeights::kPerturbed;
    else
      throw minpsc::InvalidParams("grid weights must be uniform or perturbed");
    inst = minpsc::generate_grid(args.grid, flags.seed);
    header << "c grid rows=" << args.grid.rows << " cols=" << args.grid.cols
           << " defect=" << args.grid.defect_prob << " weights=" << args.grid_weights
           << " weight=" << args.grid.weight << " seed=" << flags.seed << "\n";
  } else if (kind == "tree-plus-g") {
    inst = minpsc::generate_tree_plus(args.tree, flags.seed);
    header << "c tree-plus-g n=" << args.tree.n << " g=" << args.tree.g
           << " wmax=" << args.tree.wmax << " seed=" << flags.seed << "\n";
  } else if (kind == "geometric") {
    inst = minpsc::generate_geometric(args.geo, flags.seed);
    header << "c geometric n=" << args.geo.n << " radius=" << args.geo.radius
           << " alpha=" << args.geo.alpha << " seed=" << flags.seed << "\n";
  } else {
    const auto sc = minpsc::parse_set_cover(args.universe, args.sets);
    inst = minpsc::setcover_to_minpsc(sc);
    header << "c setcover universe=" << args.universe << " sets=" << args.sets << "\n";
  }
  write_or_print(args.out, header.str() + minpsc::render_instance(inst), flags);
  return 0;
}

// ------------------------------------------------------------ kernelize

int run_kernelize(const std::string& path, const std::string& out, bool stats,
                  const GlobalFlags& flags) {
  const minpsc::Instance inst = minpsc::read_instance_file(path).instance;
  const minpsc::KernelResult k = minpsc::kernelize(inst);
  const minpsc::KernelStats& s = k.stats;
  const std::string instance_text =
      "c offset " + std::to_string(k.offset) + "\n" + minpsc::render_instance(k.reduced);
  if (!out.empty()) minpsc::write_text_file(out, instance_text);

  if (flags.json()) {
    json j;
    j["offset"] = k.offset;
    if (out.empty()) j["instance"] = minpsc::render_instance(k.reduced);
    if (stats) {
      j["stats"] = {{"n", s.n},
                    {"m", s.m},
                    {"g", s.g},
                    {"rr1", s.rr1},
                    {"rr2", s.rr2},
                    {"cycle", s.cycle},
                    {"annotated_vertices", s.annotated_vertices},
                    {"annotated_edges", s.annotated_edges},
                    {"reduced_vertices", s.reduced_vertices},
                    {"reduced_edges", s.reduced_edges},
                    {"vertex_bound", s.vertex_bound()},
                    {"edge_bound", s.edge_bound()},
                    {"vertex_slack", s.vertex_bound() - std::int64_t(s.reduced_vertices)},
                    {"edge_slack", s.edge_bound() - std::int64_t(s.reduced_edges)},
                    {"within_bounds", s.within_bounds()}};
    }
    emit(flags, j.dump(2) + "\n");
    return 0;
  }

  std::ostringstream text;
  if (out.empty()) text << instance_text;
  else text << "offset " << k.offset << "\n";
  if (stats) {
    const char* prefix = out.empty() ? "c " : "";
    text << prefix << "input n=" << s.n << " m=" << s.m << " g=" << s.g << "\n";
    text << prefix << "rules rr1=" << s.rr1 << " rr2=" << s.rr2 << (s.cycle ? " cycle" : "")
         << "\n";
    text << prefix << "annotated n=" << s.annotated_vertices << " m=" << s.annotated_edges
         << " (bounds " << s.annotated_vertex_bound() << ", " << s.annotated_edge_bound()
         << ")\n";
    text << prefix << "reduced n'=" << s.reduced_vertices << " m'=" << s.reduced_edges
         << " (bounds " << s.vertex_bound() << ", " << s.edge_bound() << "; slack "
         << s.vertex_bound() - std::int64_t(s.reduced_vertices) << ", "
         << s.edge_bound() - std::int64_t(s.reduced_edges) << ")\n";
  }
  emit(flags, text.str());
  return 0;
}

// --------------------------------------------------------------- verify

int run_verify(const std::string& instance_path, const std::string& solution_path,
               const GlobalFlags& flags) {
  const minpsc::Instance inst = minpsc::read_instance_file(instance_path).instance;
  const minpsc::EdgeSet edges = minpsc::read_solution_file(inst, solution_path);
  const bool feasible = minpsc::is_connected_spanning(inst, edges);
  if (!feasible) {
    if (flags.json())
      emit(flags, json{{"feasible", false}}.dump(2) + "\n");
    else
      emit(flags, "INFEASIBLE selection does not connect all vertices\n");
    return kExitInfeasible;
  }
  const minpsc::Solution sol = minpsc::cost(inst, edges);
  const minpsc::Weight m = minpsc::margin(inst, sol);
  if (flags.json()) {
    emit(flags, json{{"feasible", true},
                     {"total", sol.total_cost},
                     {"margin", m},
                     {"per_vertex_cost", sol.per_vertex_cost}}
                        .dump(2) +
                    "\n");
  } else {
    emit(flags, "OK total " + std::to_string(sol.total_cost) + " margin " + std::to_string(m) +
                    "\n");
  }
  return 0;
}

// ---------------------------------------------------------------- bench
//
// Suite file (JSON):
//   {"instances": [{"kind": "tree-plus-g", "n": 50, "g": 3, "wmax": 10,
//                   "seeds": [1, 2]},
//                  {"kind": "file", "path": "fig1.gr"}, ...],
//    "algos": ["exact", "cc"],
//    "epsilon": 0.1, "deterministic": true}
// Rows are instance x seed x algo in suite order.

struct BenchInstance {
  std::string name;
  std::uint64_t seed = 0;
  std::optional<minpsc::Instance> instance;
  std::string error;
};

std::vector<BenchInstance> bench_instances(const json& suite, std::uint64_t default_seed) {
  std::vector<BenchInstance> out;
  for (const json& item : suite.at("instances")) {
    const std::string kind = item.at("kind").get<std::string>();
    std::vector<std::uint64_t> seeds = {default_seed};
    if (item.contains("seeds")) seeds = item.at("seeds").get<std::vector<std::uint64_t>>();
    if (kind == "file" || kind == "setcover") seeds = {0};
    for (std::uint64_t seed : seeds) {
      BenchInstance b;
      b.seed = seed;
      std::ostringstream name;
      try {
        if (kind == "file") {
          const std::string path = item.at("path").get<std::string>();
          name << path;
          b.instance = minpsc::read_instance_file(path).instance;
        } else if (kind == "grid") {
          minpsc::GridParams p;
          p.rows = item.value("rows", p.rows);
          p.cols = item.value("cols", p.cols);
          p.defect_prob = item.value("defect", p.defect_prob);
          p.weight = item.value("weight", p.weight);
          const std::string weights = item.value("weights", std::string("uniform"));
          p.weights = weights == "perturbed" ? minpsc::GridWeights::kPerturbed
                                             : minpsc::GridWeights::kUniform;
          name << "grid-" << p.rows << "x" << p.cols << "-" << weights;
          b.instance = minpsc::generate_grid(p, seed);
        } else if (kind == "tree-plus-g") {
          minpsc::TreePlusParams p;
          p.n = item.value("n", p.n);
          p.g = item.value("g", p.g);
          p.wmax = item.value("wmax", p.wmax);
          name << "tree-plus-g-n" << p.n << "-g" << p.g;
          b.instance = minpsc::generate_tree_plus(p, seed);
        } else if (kind == "geometric") {
          minpsc::GeometricParams p;
          p.n = item.value("n", p.n);
          p.radius = item.value("radius", p.radius);
          p.alpha = item.value("alpha", p.alpha);
          name << "geometric-n" << p.n;
          b.instance = minpsc::generate_geometric(p, seed);
        } else if (kind == "setcover") {
          const std::size_t universe = item.at("universe").get<std::size_t>();
          const std::string sets = item.at("sets").get<std::string>();
          name << "setcover-u" << universe;
          b.instance = minpsc::setcover_to_minpsc(minpsc::parse_set_cover(universe, sets));
        } else {
          throw minpsc::InvalidParams("unknown instance kind '" + kind + "'");
        }
      } catch (const minpsc::Error& e) {
        b.error = e.what();
      }
      b.name = name.str().empty() ? kind : name.str();
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

int run_bench(const std::string& suite_path, const std::string& out, const GlobalFlags& flags) {
  json suite;
  try {
    suite = json::parse(minpsc::read_text_file(suite_path));
  } catch (const json::exception& e) {
    throw minpsc::ParseError(0, std::string("suite: ") + e.what());
  }
  const auto algos = suite.at("algos").get<std::vector<std::string>>();
  const double epsilon = suite.value("epsilon", 0.1);
  const bool deterministic = suite.value("deterministic", false);

  std::ostringstream csv;
  csv.imbue(std::locale::classic());
  csv << "instance,n,m,g,c,algo,cost,margin,time_ms,seed\n";
  std::size_t rows = 0, failures = 0;
  for (const BenchInstance& b : bench_instances(suite, flags.seed)) {
    for (const std::string& algo : algos) {
      ++rows;
      std::string n, m, g, c, cost, margin, time_ms;
      if (b.instance) {
        n = std::to_string(b.instance->vertex_count());
        m = std::to_string(b.instance->edge_count());
        g = std::to_string(b.instance->edge_count() + 1 - b.instance->vertex_count());
      }
      try {
        if (!b.instance) throw minpsc::Error(b.error);
        minpsc::SolveOptions options;
        options.algo = minpsc::parse_algorithm(algo);
        options.seed = b.seed;
        options.epsilon = epsilon;
        options.deterministic = deterministic;
        const minpsc::SolveReport r = minpsc::solve(*b.instance, options);
        c = std::to_string(r.c);
        cost = std::to_string(r.solution.total_cost);
        margin = std::to_string(r.margin);
        time_ms = fixed3(r.time_ms);
      } catch (const minpsc::Error& e) {
        ++failures;
        cost = csv_field(std::string("ERROR: ") + e.what());
      }
      csv << csv_field(b.name) << ',' << n << ',' << m << ',' << g << ',' << c << ','
          << csv_field(algo) << ',' << cost << ',' << margin << ',' << time_ms << ','
          << b.seed << '\n';
    }
  }
  write_or_print(out, csv.str(), flags);
  return rows > 0 && failures == rows ? kExitError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"Min-power symmetric connectivity solver toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "random seed")->capture_default_str();
  app.add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--quiet,-q", flags.quiet, "suppress standard output");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("instance", solve_args.path)->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", solve_args.algo)
      ->check(CLI::IsMember({"auto", "exact", "brute-tree", "connector", "cc", "kernel+exact",
                             "mst"}))
      ->capture_default_str();
  solve->add_option("--epsilon", solve_args.epsilon, "color coding failure probability")
      ->capture_default_str();
  solve->add_flag("--deterministic", solve_args.deterministic,
                  "enumerate all colorings instead of sampling");
  solve->add_option("--max-repetitions", solve_args.max_repetitions,
                    "cap on colorings sampled per composition");
  solve->add_option("--out", solve_args.out, "write the solution file here");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "generate an instance");
  generate->require_subcommand(1);
  generate->add_option("--out", gen.out, "output file (default: stdout)");
  auto* grid = generate->add_subcommand("grid", "grid with vertex defects");
  grid->add_option("--rows", gen.grid.rows)->capture_default_str();
  grid->add_option("--cols", gen.grid.cols)->capture_default_str();
  grid->add_option("--defect", gen.grid.defect_prob)->capture_default_str();
  grid->add_option("--weights", gen.grid_weights)
      ->check(CLI::IsMember({"uniform", "perturbed"}))
      ->capture_default_str();
  grid->add_option("--weight", gen.grid.weight)->capture_default_str();
  auto* tree = generate->add_subcommand("tree-plus-g", "random tree plus g chords");
  tree->add_option("--n", gen.tree.n)->capture_default_str();
  tree->add_option("--g", gen.tree.g)->capture_default_str();
  tree->add_option("--wmax", gen.tree.wmax)->capture_default_str();
  auto* geo = generate->add_subcommand("geometric", "random geometric graph");
  geo->add_option("--n", gen.geo.n)->capture_default_str();
  geo->add_option("--radius", gen.geo.radius)->capture_default_str();
  geo->add_option("--alpha", gen.geo.alpha)->capture_default_str();
  auto* setcover = generate->add_subcommand("setcover", "set cover transformation");
  setcover->add_option("--universe", gen.universe)->required();
  setcover->add_option("--sets", gen.sets, "e.g. \"0,1;1,2\"")->required();
  for (auto* sub : {grid, tree, geo, setcover}) sub->fallthrough();

  std::string kernel_in, kernel_out;
  bool kernel_stats = false;
  auto* kernelize = app.add_subcommand("kernelize", "reduce to a kernel of size O(g)");
  kernelize->add_option("instance", kernel_in)->required()->check(CLI::ExistingFile);
  kernelize->add_option("--out", kernel_out, "write the reduced instance here");
  kernelize->add_flag("--stats", kernel_stats, "print size statistics");

  std::string verify_instance, verify_solution;
  auto* verify = app.add_subcommand("verify", "check and cost a solution");
  verify->add_option("instance", verify_instance)->required()->check(CLI::ExistingFile);
  verify->add_option("solution", verify_solution)->required()->check(CLI::ExistingFile);

  std::string suite_path, bench_out;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite, emit CSV");
  bench->add_option("suite", suite_path)->required()->check(CLI::ExistingFile);
  bench->add_option("--out", bench_out, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*solve) return run_solve(solve_args, flags);
    if (*generate) {
      for (const auto* sub : {grid, tree, geo, setcover})
        if (*sub) return run_generate(sub->get_name(), gen, flags);
    }
    if (*kernelize) return run_kernelize(kernel_in, kernel_out, kernel_stats, flags);
    if (*verify) return run_verify(verify_instance, verify_solution, flags);
    if (*bench) return run_bench(suite_path, bench_out, flags);
  } catch (const minpsc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const minpsc::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const minpsc::DisconnectedSelection& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const minpsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitError;
}

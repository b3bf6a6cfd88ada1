#include "minpsc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace minpsc {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, const char* what) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(field) + "'");
  return value;
}

// Calls `fn(line_no, fields)` for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_fields(line);
    if (!fields.empty() && fields[0] != "c") fn(line_no, fields);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::vector<Weight> annotations;
  bool any_annotation = false;

  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (f.size() != 4 || f[1] != "minpsc")
        throw ParseError(line_no, "expected 'p minpsc <n> <m>'");
      n = parse_number<std::size_t>(f[2], line_no, "vertex count");
      m = parse_number<std::size_t>(f[3], line_no, "edge count");
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      have_header = true;
      annotations.assign(n, 0);
      edges.reserve(m);
      return;
    }
    if (!have_header) throw ParseError(line_no, "record before problem line");
    if (f[0] == "e") {
      if (f.size() != 4) throw ParseError(line_no, "expected 'e <u> <v> <w>'");
      Edge e{parse_number<VertexId>(f[1], line_no, "vertex id"),
             parse_number<VertexId>(f[2], line_no, "vertex id"),
             parse_number<Weight>(f[3], line_no, "weight")};
      if (e.u >= n || e.v >= n) throw ParseError(line_no, "vertex id out of range");
      if (e.w <= 0) throw ParseError(line_no, "edge weights must be positive");
      if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared");
      edges.push_back(e);
    } else if (f[0] == "l") {
      if (f.size() != 3) throw ParseError(line_no, "expected 'l <v> <value>'");
      const auto v = parse_number<VertexId>(f[1], line_no, "vertex id");
      const auto value = parse_number<Weight>(f[2], line_no, "annotation");
      if (v >= n) throw ParseError(line_no, "vertex id out of range");
      if (value < 0) throw ParseError(line_no, "annotation must be nonnegative");
      annotations[v] = value;
      any_annotation = true;
    } else {
      throw ParseError(line_no, "unknown record type '" + std::string(f[0]) + "'");
    }
  });

  if (!have_header) throw ParseError(0, "missing problem line");
  if (edges.size() != m)
    throw ParseError(0, "declared " + std::to_string(m) + " edges, found " +
                            std::to_string(edges.size()));
  ParsedInstance out;
  try {
    out.instance = Instance(n, std::move(edges));
  } catch (const InvalidInstance& e) {
    throw ParseError(0, e.what());
  }
  if (!is_connected(out.instance)) throw ParseError(0, "instance graph is not connected");
  if (any_annotation) out.annotations = std::move(annotations);
  return out;
}

std::string render_instance(const Instance& instance, const std::vector<Weight>* annotations) {
  std::ostringstream os;
  os << "p minpsc " << instance.vertex_count() << ' ' << instance.edge_count() << '\n';
  for (const Edge& e : instance.edges()) os << "e " << e.u << ' ' << e.v << ' ' << e.w << '\n';
  if (annotations) {
    for (VertexId v = 0; v < annotations->size(); ++v)
      if ((*annotations)[v] != 0) os << "l " << v << ' ' << (*annotations)[v] << '\n';
  }
  return os.str();
}

EdgeSet parse_solution(const Instance& instance, std::string_view text) {
  EdgeSet edges;
  for_each_record(text, [&](std::size_t line_no, const std::vector<std::string_view>& f) {
    if (f[0] != "s" || f.size() != 3) throw ParseError(line_no, "expected 's <u> <v>'");
    const auto u = parse_number<VertexId>(f[1], line_no, "vertex id");
    const auto v = parse_number<VertexId>(f[2], line_no, "vertex id");
    const EdgeId id = instance.find_edge(u, v);
    if (id == Instance::kNoEdge)
      throw ParseError(line_no, "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    edges.push_back(id);
  });
  return normalize_edge_set(instance, edges);
}

std::string render_solution(const Instance& instance, std::span<const EdgeId> edges) {
  std::ostringstream os;
  for (EdgeId id : edges) os << "s " << instance.edge(id).u << ' ' << instance.edge(id).v << '\n';
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

ParsedInstance read_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

EdgeSet read_solution_file(const Instance& instance, const std::string& path) {
  return parse_solution(instance, read_text_file(path));
}

}  // namespace minpsc

#pragma once

// Text formats.
//
// Instance:
//   c <comment>
//   p minpsc <n> <m>
//   e <u> <v> <w>        (exactly m lines, 0-based ids, w >= 1)
//   l <v> <value>        (optional vertex annotations / lower bounds)
//
// Solution:
//   s <u> <v>            (one line per selected edge)

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minpsc/graph.hpp"

namespace minpsc {

struct ParsedInstance {
  Instance instance;
  /// Present iff the file had at least one `l` line; unlisted vertices are 0.
  std::optional<std::vector<Weight>> annotations;
};

/// Throws ParseError on malformed text and on zero weights, self-loops,
/// parallel edges or a disconnected graph.
ParsedInstance parse_instance(std::string_view text);
ParsedInstance read_instance_file(const std::string& path);

/// Canonical rendering; `l` lines are emitted for nonzero annotations only.
std::string render_instance(const Instance& instance,
                            const std::vector<Weight>* annotations = nullptr);

EdgeSet parse_solution(const Instance& instance, std::string_view text);
EdgeSet read_solution_file(const Instance& instance, const std::string& path);
std::string render_solution(const Instance& instance, std::span<const EdgeId> edges);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace minpsc

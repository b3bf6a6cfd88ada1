#include "minpsc/hardness.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <string>

namespace minpsc {

namespace {

void validate(const SetCoverInstance& sc) {
  if (sc.universe_size == 0) throw InvalidParams("universe must not be empty");
  std::vector<char> covered(sc.universe_size, 0);
  for (const auto& set : sc.sets) {
    for (std::size_t u : set) {
      if (u >= sc.universe_size)
        throw InvalidParams("element " + std::to_string(u) + " outside the universe");
      covered[u] = 1;
    }
  }
  for (std::size_t u = 0; u < sc.universe_size; ++u)
    if (!covered[u]) throw UncoveredElement("element " + std::to_string(u) + " is in no set");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

SetCoverInstance parse_set_cover(std::size_t universe_size, std::string_view text) {
  SetCoverInstance sc;
  sc.universe_size = universe_size;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view chunk = trim(text.substr(pos, end - pos));
    auto& set = sc.sets.emplace_back();
    std::size_t p = 0;
    while (p <= chunk.size() && !chunk.empty()) {
      std::size_t q = chunk.find(',', p);
      if (q == std::string_view::npos) q = chunk.size();
      const std::string_view item = trim(chunk.substr(p, q - p));
      std::size_t value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
        throw InvalidParams("bad set element '" + std::string(item) + "'");
      set.push_back(value);
      p = q + 1;
      if (q == chunk.size()) break;
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (end == text.size()) break;
    pos = end + 1;
  }
  validate(sc);
  return sc;
}

VertexId setcover_hub() { return 0; }

VertexId setcover_element_vertex(const SetCoverInstance&, std::size_t element) {
  return static_cast<VertexId>(1 + element);
}

VertexId setcover_set_vertex(const SetCoverInstance& sc, std::size_t set) {
  return static_cast<VertexId>(1 + sc.universe_size + set);
}

Instance setcover_to_minpsc(const SetCoverInstance& sc) {
  validate(sc);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sc.sets.size(); ++i)
    edges.push_back({setcover_hub(), setcover_set_vertex(sc, i), 1});
  for (std::size_t i = 0; i < sc.sets.size(); ++i) {
    std::vector<std::size_t> members = sc.sets[i];
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (std::size_t u : members)
      edges.push_back({setcover_element_vertex(sc, u), setcover_set_vertex(sc, i), 2});
  }
  return Instance(1 + sc.universe_size + sc.sets.size(), std::move(edges));
}

Weight lightest_edge_sum(const Instance& instance) {
  Weight total = 0;
  for (VertexId v = 0; v < instance.vertex_count(); ++v) {
    Weight lightest = 0;
    bool any = false;
    for (const auto& inc : instance.neighbors(v)) {
      lightest = any ? std::min(lightest, inc.w) : inc.w;
      any = true;
    }
    total += lightest;
  }
  return total;
}

Weight margin(const Instance& instance, const Solution& solution) {
  return solution.total_cost - lightest_edge_sum(instance);
}

std::size_t brute_force_set_cover(const SetCoverInstance& sc) {
  validate(sc);
  const std::size_t k = sc.sets.size();
  if (k > kSetCoverBruteForceLimit)
    throw InstanceTooLarge("set-cover enumeration is limited to " +
                           std::to_string(kSetCoverBruteForceLimit) + " sets");
  std::size_t best = k + 1;
  std::vector<char> covered(sc.universe_size);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::fill(covered.begin(), covered.end(), 0);
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u)
        for (std::size_t u : sc.sets[i]) covered[u] = 1;
    if (std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; })) best = size;
  }
  if (best > k) throw UncoveredElement("no cover exists");
  return best;
}

}  // namespace minpsc

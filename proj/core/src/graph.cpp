#include "rwg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace rwg {

EdgeLabelledGraph reads_to_path_graph(const ReadCollection& reads) {
  EdgeLabelledGraph g;
  std::uint32_t next = 1;
  for (ReadId id = 0; id < reads.size(); ++id) {
    const auto s = reads.encoded(id);
    for (std::uint32_t k = 1; k <= s.size(); ++k) g.edges.push_back({next + k - 1, next + k, s[k - 1]});
    next += static_cast<std::uint32_t>(s.size()) + 1;
  }
  g.node_count = next - 1;
  return g;
}

std::uint32_t path_node_id(const ReadCollection& reads, ReadId read, std::uint32_t depth) {
  std::uint32_t id = 1;
  for (ReadId i = 0; i < read; ++i) id += reads.length(i) + 1;
  return id + depth;
}

std::string WheelerViolation::describe() const {
  auto edge = [](const Edge& e) {
    return "(" + std::to_string(e.origin) + "->" + std::to_string(e.destination) + ", label " +
           std::to_string(e.label) + ")";
  };
  switch (kind) {
    case Kind::label_order:
      return "edges " + edge(first) + " and " + edge(second) + ": smaller label does not reach a smaller rank";
    case Kind::origin_order:
      return "edges " + edge(first) + " and " + edge(second) + ": same label, origin order not preserved";
    case Kind::source_order:
      return "in-degree-0 node " + std::to_string(source_node) + " has rank " + std::to_string(source_rank) +
             ", after a node with positive in-degree";
  }
  return {};
}

std::optional<WheelerViolation> verify_wheeler(const EdgeLabelledGraph& graph,
                                               std::span<const std::uint32_t> rank_of_node, bool relaxed) {
  const std::uint32_t n = graph.node_count;
  if (rank_of_node.size() != n) throw std::invalid_argument("ordering must rank every node");
  std::vector<bool> used(n, false);
  for (auto r : rank_of_node) {
    if (r == 0 || r > n || used[r - 1]) throw std::invalid_argument("ordering is not a permutation of 1..N");
    used[r - 1] = true;
  }
  for (const auto& e : graph.edges)
    if (e.origin == 0 || e.origin > n || e.destination == 0 || e.destination > n)
      throw std::invalid_argument("edge endpoint out of range");

  auto rank = [&](std::uint32_t v) { return rank_of_node[v - 1]; };

  // Sorting by (label, origin rank, destination rank), the conditions hold
  // iff destination ranks never decrease and strictly increase whenever the
  // label changes.
  std::vector<Edge> sorted = graph.edges;
  std::sort(sorted.begin(), sorted.end(), [&](const Edge& a, const Edge& b) {
    return std::tuple(a.label, rank(a.origin), rank(a.destination)) <
           std::tuple(b.label, rank(b.origin), rank(b.destination));
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Edge& a = sorted[i - 1];
    const Edge& b = sorted[i];
    if (a.label != b.label) {
      if (rank(a.destination) >= rank(b.destination))
        return WheelerViolation{WheelerViolation::Kind::label_order, a, b};
    } else if (rank(a.destination) > rank(b.destination)) {
      return WheelerViolation{WheelerViolation::Kind::origin_order, a, b};
    }
  }

  if (!relaxed) {
    std::vector<bool> has_in(n, false);
    for (const auto& e : graph.edges) has_in[e.destination - 1] = true;
    std::uint32_t min_positive = UINT32_MAX;
    for (std::uint32_t v = 1; v <= n; ++v)
      if (has_in[v - 1]) min_positive = std::min(min_positive, rank(v));
    std::optional<WheelerViolation> worst;
    for (std::uint32_t v = 1; v <= n; ++v) {
      if (has_in[v - 1] || rank(v) < min_positive) continue;
      if (!worst || rank(v) < worst->source_rank) {
        WheelerViolation w{WheelerViolation::Kind::source_order};
        w.source_node = v;
        w.source_rank = rank(v);
        worst = w;
      }
    }
    if (worst) return worst;
  }
  return std::nullopt;
}

}  // namespace rwg

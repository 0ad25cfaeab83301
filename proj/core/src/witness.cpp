#include "rwg/witness.hpp"

#include <algorithm>
#include <limits>

namespace rwg {
namespace {

// Full context of the symbol emitted by a node: context(read) . read[1..depth].
class FullContext {
 public:
  FullContext(const ReadCollection& reads, const ContextAssignment& contexts) : reads_(reads), contexts_(contexts) {}

  std::size_t length(const NodeRef& v) const { return contexts_.contexts[v.read_id].size() + v.depth; }

  // i-th symbol counted from the end, 0-based
  char back(const NodeRef& v, std::size_t i) const {
    if (i < v.depth) return reads_.read(v.read_id)[v.depth - 1 - i];
    const std::string& ctx = contexts_.contexts[v.read_id];
    return ctx[ctx.size() - 1 - (i - v.depth)];
  }

  std::uint32_t common_suffix(const NodeRef& a, const NodeRef& b) const {
    const std::size_t limit = std::min(length(a), length(b));
    std::size_t i = 0;
    while (i < limit && back(a, i) == back(b, i)) ++i;
    return static_cast<std::uint32_t>(i);
  }

 private:
  const ReadCollection& reads_;
  const ContextAssignment& contexts_;
};

}  // namespace

WitnessPointerTable build_witness_table(const ReadCollection& reads, const PathLayout& layout,
                                        const ContextAssignment& contexts, const GraphBWT& graph) {
  const RunLengthBWT& bwt = graph.bwt();
  const std::uint64_t n = bwt.size();
  const FullContext full(reads, contexts);

  std::vector<NodeRef> origin;  // origin[p - 1]: node emitting BWT symbol p
  std::vector<Symbol> symbol;
  origin.reserve(n);
  symbol.reserve(n);
  for (const auto& node : layout.nodes) {
    if (node.depth == reads.length(node.read_id)) continue;
    origin.push_back(node);
    symbol.push_back(reads.encoded(node.read_id)[node.depth]);
  }

  // adjacent[p]: common suffix of the full contexts at BWT positions p and p+1 (1-based)
  std::vector<std::uint32_t> adjacent(n + 1, 0);
  for (std::uint64_t p = 1; p < n; ++p) adjacent[p] = full.common_suffix(origin[p - 1], origin[p]);

  std::vector<std::pair<std::uint64_t, bool>> positions;  // (BWT position, is run boundary)
  for (std::size_t run = 0; run < bwt.rho(); ++run) {
    positions.emplace_back(bwt.run_first(run), true);
    positions.emplace_back(bwt.run_last(run), true);
  }
  for (auto sink : graph.sinks().ones()) {
    const std::uint64_t before = graph.sinks().rank0(sink);
    if (before >= 1) positions.emplace_back(before, false);
    if (before + 1 <= n) positions.emplace_back(before + 1, false);
  }
  std::sort(positions.begin(), positions.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  });
  positions.erase(std::unique(positions.begin(), positions.end(),
                              [](const auto& a, const auto& b) { return a.first == b.first; }),
                  positions.end());

  auto target_at = [&](std::uint64_t q, std::uint32_t lcs) {
    return WitnessTarget{q, TextPosition{origin[q - 1].read_id, origin[q - 1].depth + 1}, lcs};
  };

  WitnessPointerTable table;
  table.entries.reserve(positions.size());
  for (const auto& [p, boundary] : positions) {
    const Symbol c = symbol[p - 1];
    WitnessEntry entry;
    entry.bwt_pos = p;
    entry.symbol = c;
    entry.position = TextPosition{origin[p - 1].read_id, origin[p - 1].depth + 1};
    entry.run_boundary = boundary;

    // Scan outwards; `running` is the common suffix of full contexts between
    // p and q, an upper bound on every value further away.
    std::int64_t best = -1;
    auto running = std::numeric_limits<std::uint32_t>::max();
    for (std::uint64_t q = p - 1; q >= 1 && static_cast<std::int64_t>(running) > best; --q) {
      running = std::min(running, adjacent[q]);
      if (symbol[q - 1] != c) continue;
      const std::uint32_t value = std::min(running, origin[q - 1].depth);
      if (static_cast<std::int64_t>(value) > best) {
        best = value;
        entry.pred = target_at(q, value);
      }
    }
    best = -1;
    running = std::numeric_limits<std::uint32_t>::max();
    for (std::uint64_t q = p + 1; q <= n && static_cast<std::int64_t>(running) > best; ++q) {
      running = std::min(running, adjacent[q - 1]);
      if (symbol[q - 1] != c) continue;
      const std::uint32_t value = std::min(running, origin[q - 1].depth);
      if (static_cast<std::int64_t>(value) > best) {
        best = value;
        entry.succ = target_at(q, value);
      }
    }
    table.entries.push_back(std::move(entry));
  }
  return table;
}

}  // namespace rwg

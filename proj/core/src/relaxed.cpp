#include "rwg/relaxed.hpp"

#include <algorithm>
#include <stdexcept>

namespace rwg {

PathLayout layout_relaxed(const ReadCollection& reads, const ContextAssignment& contexts) {
  if (contexts.size() != reads.size()) throw std::invalid_argument("one context per read expected");
  std::vector<std::vector<Symbol>> ctx;
  ctx.reserve(reads.size());
  for (const auto& c : contexts.contexts) ctx.push_back(reads.alphabet().encode(c));

  std::vector<std::uint32_t> tie(reads.size());
  const auto lex = lexicographic_read_order(reads);
  for (std::uint32_t i = 0; i < lex.size(); ++i) tie[lex[i]] = i;

  // i-th symbol of context . read[1..depth] counted from the end
  auto back = [&](const NodeRef& v, std::size_t i) {
    if (i < v.depth) return reads.encoded(v.read_id)[v.depth - 1 - i];
    const auto& c = ctx[v.read_id];
    return c[c.size() - 1 - (i - v.depth)];
  };

  PathLayout layout;
  layout.nodes.reserve(reads.total_length() + reads.size());
  for (ReadId id = 0; id < reads.size(); ++id)
    for (std::uint32_t k = 0; k <= reads.length(id); ++k) layout.nodes.push_back({id, k});

  std::sort(layout.nodes.begin(), layout.nodes.end(), [&](const NodeRef& a, const NodeRef& b) {
    const std::size_t la = ctx[a.read_id].size() + a.depth;
    const std::size_t lb = ctx[b.read_id].size() + b.depth;
    for (std::size_t i = 0; i < std::min(la, lb); ++i) {
      const Symbol x = back(a, i);
      const Symbol y = back(b, i);
      if (x != y) return x < y;
    }
    if (la != lb) return la < lb;
    return tie[a.read_id] < tie[b.read_id];
  });
  return layout;
}

RelaxedIndex build_relaxed(const ReadCollection& reads, const ContextAssignment& contexts, PathIndexOptions options) {
  return assemble_path_index(IndexKind::relaxed, reads, layout_relaxed(reads, contexts), contexts, options);
}

RunStats run_count_report(const PathIndex& index) {
  return {index.bwt().rho(), index.bwt().size(), index.read_count(), index.node_count()};
}

}  // namespace rwg

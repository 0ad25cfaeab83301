#include "rwg/wheeler.hpp"

#include <algorithm>

namespace rwg {

PathLayout layout_wheeler_paths(const ReadCollection& reads) {
  std::vector<std::uint32_t> tie(reads.size());
  const auto lex = lexicographic_read_order(reads);
  for (std::uint32_t i = 0; i < lex.size(); ++i) tie[lex[i]] = i;

  PathLayout layout;
  layout.nodes.reserve(reads.total_length() + reads.size());
  for (ReadId id = 0; id < reads.size(); ++id)
    for (std::uint32_t k = 0; k <= reads.length(id); ++k) layout.nodes.push_back({id, k});

  std::sort(layout.nodes.begin(), layout.nodes.end(), [&](const NodeRef& a, const NodeRef& b) {
    const auto x = reads.encoded(a.read_id).first(a.depth);
    const auto y = reads.encoded(b.read_id).first(b.depth);
    if (std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend())) return true;
    if (std::lexicographical_compare(y.rbegin(), y.rend(), x.rbegin(), x.rend())) return false;
    return tie[a.read_id] < tie[b.read_id];
  });
  return layout;
}

WheelerPathIndex build_wheeler_paths(const ReadCollection& reads, PathIndexOptions options) {
  return assemble_path_index(IndexKind::paths, reads, layout_wheeler_paths(reads), empty_contexts(reads), options);
}

}  // namespace rwg

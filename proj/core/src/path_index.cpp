#include "rwg/path_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "rwg/witness.hpp"

namespace rwg {

std::optional<TextPosition> PathLayout::node_origin(std::uint64_t rank) const {
  const NodeRef& node = nodes.at(rank - 1);
  if (node.depth == 0) return std::nullopt;
  return TextPosition{node.read_id, node.depth};
}

std::vector<std::uint32_t> PathLayout::rank_of_path_nodes(const ReadCollection& reads) const {
  std::vector<std::uint32_t> first(reads.size(), 1);
  for (ReadId i = 1; i < reads.size(); ++i) first[i] = first[i - 1] + reads.length(i - 1) + 1;
  std::vector<std::uint32_t> rank(nodes.size());
  for (std::size_t r = 0; r < nodes.size(); ++r)
    rank.at(first[nodes[r].read_id] + nodes[r].depth - 1) = static_cast<std::uint32_t>(r + 1);
  return rank;
}

std::optional<TextPosition> ToeholdSamples::after_sink_at(std::uint64_t bwt_pos) const {
  auto it = std::lower_bound(after_sink.begin(), after_sink.end(), bwt_pos,
                             [](const auto& e, std::uint64_t p) { return e.first < p; });
  if (it == after_sink.end() || it->first != bwt_pos) return std::nullopt;
  return it->second;
}

LFBreakTable::LFBreakTable(std::vector<BreakEntry> entries) : entries_(std::move(entries)) {
  if (!std::is_sorted(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.at < b.at; }))
    throw std::invalid_argument("break table must be sorted by text position");
}

std::optional<TextPosition> LFBreakTable::next(TextPosition x) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), x,
                             [](const TextPosition& p, const BreakEntry& e) { return p < e.at; });
  if (it == entries_.begin() || std::prev(it)->at.read_id != x.read_id)
    throw std::logic_error("no break at or before this position in its read");
  const BreakEntry& b = *std::prev(it);
  const std::uint32_t d = x.offset - b.at.offset;
  if (!b.next) {
    if (d != 0) throw std::logic_error("break table inconsistent past the last BWT symbol");
    return std::nullopt;
  }
  return TextPosition{b.next->read_id, b.next->offset + d};
}

const WitnessEntry* WitnessPointerTable::find(std::uint64_t bwt_pos) const {
  const WitnessEntry* e = first_at_or_after(bwt_pos);
  return e != nullptr && e->bwt_pos == bwt_pos ? e : nullptr;
}

const WitnessEntry* WitnessPointerTable::first_at_or_after(std::uint64_t bwt_pos) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), bwt_pos,
                             [](const WitnessEntry& e, std::uint64_t p) { return e.bwt_pos < p; });
  return it == entries.end() ? nullptr : &*it;
}

std::size_t WitnessPointerTable::run_boundary_entries() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.run_boundary; }));
}

RunLengthBWT layout_bwt(const ReadCollection& reads, const PathLayout& layout) {
  std::vector<Symbol> labels;
  labels.reserve(reads.total_length());
  for (const auto& node : layout.nodes)
    if (node.depth < reads.length(node.read_id)) labels.push_back(reads.encoded(node.read_id)[node.depth]);
  return rle_encode(labels);
}

PathIndex assemble_path_index(IndexKind kind, const ReadCollection& reads, const PathLayout& layout,
                              ContextAssignment contexts, PathIndexOptions options) {
  if (layout.node_count() != reads.total_length() + reads.size())
    throw std::invalid_argument("layout does not cover every path node");
  if (contexts.size() != reads.size()) throw std::invalid_argument("one context per read expected");

  const std::uint64_t nodes = layout.node_count();
  std::vector<std::uint64_t> source_ranks, sink_ranks;
  std::vector<TextPosition> text;  // text[p - 1]: position of BWT symbol p
  text.reserve(reads.total_length());

  PathIndex index;
  index.kind = kind;
  index.alphabet = reads.alphabet();
  for (std::uint64_t rank = 1; rank <= nodes; ++rank) {
    const NodeRef& node = layout.nodes[rank - 1];
    if (node.depth == 0) source_ranks.push_back(rank);
    if (node.depth == reads.length(node.read_id)) {
      sink_ranks.push_back(rank);
      index.sink_reads.push_back(node.read_id);
    } else {
      text.push_back({node.read_id, node.depth + 1});
    }
  }
  index.graph = GraphBWT(layout_bwt(reads, layout), BitVector::from_positions(nodes, source_ranks),
                         BitVector::from_positions(nodes, sink_ranks));
  const RunLengthBWT& bwt = index.graph.bwt();
  const std::uint64_t n = bwt.size();

  for (ReadId id = 0; id < reads.size(); ++id) index.read_lengths.push_back(reads.length(id));

  index.toeholds.run_heads.reserve(bwt.rho());
  for (std::size_t run = 0; run < bwt.rho(); ++run) index.toeholds.run_heads.push_back(text[bwt.run_first(run) - 1]);
  for (auto sink : sink_ranks) {
    const std::uint64_t q = index.graph.sinks().rank0(sink) + 1;
    if (q <= n && (index.toeholds.after_sink.empty() || index.toeholds.after_sink.back().first != q))
      index.toeholds.after_sink.emplace_back(q, text[q - 1]);
  }

  // next[read][offset]: position of the BWT symbol after the one at (read, offset)
  std::vector<std::vector<std::optional<TextPosition>>> next(reads.size());
  for (ReadId id = 0; id < reads.size(); ++id) next[id].resize(reads.length(id) + 1);
  for (std::uint64_t p = 1; p < n; ++p) next[text[p - 1].read_id][text[p - 1].offset] = text[p];

  std::vector<BreakEntry> breaks;
  for (ReadId id = 0; id < reads.size(); ++id) {
    for (std::uint32_t o = 1; o <= reads.length(id); ++o) {
      const auto& here = next[id][o];
      bool parallel = false;
      if (o > 1) {
        const auto& prev = next[id][o - 1];
        parallel = prev && here && here->read_id == prev->read_id && here->offset == prev->offset + 1;
      }
      if (!parallel) breaks.push_back({{id, o}, here});
    }
  }
  index.breaks = LFBreakTable(std::move(breaks));

  if (options.witness_table) index.witness = build_witness_table(reads, layout, contexts, index.graph);
  index.contexts = std::move(contexts);
  return index;
}

}  // namespace rwg

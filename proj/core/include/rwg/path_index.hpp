#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rwg/alphabet.hpp"
#include "rwg/contexts.hpp"
#include "rwg/graph_bwt.hpp"
#include "rwg/index_kind.hpp"
#include "rwg/reads.hpp"

namespace rwg {

/// Node v_depth of a read's path: the node reached after reading depth symbols.
struct NodeRef {
  ReadId read_id = 0;
  std::uint32_t depth = 0;

  bool operator==(const NodeRef&) const = default;
};

/// Builder-side view of a path graph ordering: nodes[rank - 1] is the node
/// holding that rank. Queries never need it; tests use it as ground truth.
struct PathLayout {
  std::vector<NodeRef> nodes;

  std::uint64_t node_count() const noexcept { return nodes.size(); }
  /// Position of the symbol entering the node; nullopt for a source.
  std::optional<TextPosition> node_origin(std::uint64_t rank) const;
  /// rank_of_node[id - 1] for reads_to_path_graph's node ids.
  std::vector<std::uint32_t> rank_of_path_nodes(const ReadCollection& reads) const;
};

/// Text positions of the first symbol of every BWT run, plus of every BWT
/// symbol whose origin node directly follows a sink in rank order (at most r).
struct ToeholdSamples {
  std::vector<TextPosition> run_heads;
  std::vector<std::pair<std::uint64_t, TextPosition>> after_sink;  // sorted by BWT position

  std::optional<TextPosition> after_sink_at(std::uint64_t bwt_pos) const;
};

struct BreakEntry {
  TextPosition at;
  std::optional<TextPosition> next;  // nullopt only for the last BWT symbol

  bool operator==(const BreakEntry&) const = default;
};

/// Next-in-BWT function over text positions. Let next(x) be the position of
/// the BWT symbol following the one at x. Whenever next(R, o+1) is the
/// parallel neighbour of next(R, o), i.e. next(R, o) advanced by one, it is
/// left implicit; the remaining "breaks" are stored sorted by position and
/// answered through a predecessor search within the read.
class LFBreakTable {
 public:
  LFBreakTable() = default;
  explicit LFBreakTable(std::vector<BreakEntry> entries);

  std::optional<TextPosition> next(TextPosition x) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<BreakEntry>& entries() const noexcept { return entries_; }

  bool operator==(const LFBreakTable&) const = default;

 private:
  std::vector<BreakEntry> entries_;
};

/// A copy of a symbol in the BWT and the longest common suffix of its true
/// context with the full context of the entry that points at it.
struct WitnessTarget {
  std::uint64_t bwt_pos = 0;
  TextPosition position;
  std::uint32_t lcs = 0;

  bool operator==(const WitnessTarget&) const = default;
};

struct WitnessEntry {
  std::uint64_t bwt_pos = 0;
  Symbol symbol = 0;
  TextPosition position;  // this symbol; its true context has length offset - 1
  std::optional<WitnessTarget> pred;
  std::optional<WitnessTarget> succ;
  bool run_boundary = false;  // first or last of a run, otherwise only next to a sink

  bool operator==(const WitnessEntry&) const = default;
};

/// Entries at the first and last symbol of every run and at the BWT symbols
/// on either side of each sink, sorted by BWT position.
struct WitnessPointerTable {
  std::vector<WitnessEntry> entries;

  const WitnessEntry* find(std::uint64_t bwt_pos) const;
  const WitnessEntry* first_at_or_after(std::uint64_t bwt_pos) const;
  std::size_t run_boundary_entries() const;

  bool operator==(const WitnessPointerTable&) const = default;
};

/// Query-ready path index (dollar-free Wheeler paths or relaxed Wheeler
/// graph). Holds O(rho + r) words besides the run-length BWT.
struct PathIndex {
  IndexKind kind = IndexKind::paths;
  Alphabet alphabet;
  GraphBWT graph;
  std::vector<std::uint32_t> read_lengths;
  std::vector<ReadId> sink_reads;  // read of each sink, in rank order
  ToeholdSamples toeholds;
  LFBreakTable breaks;
  std::optional<WitnessPointerTable> witness;
  ContextAssignment contexts;

  const RunLengthBWT& bwt() const noexcept { return graph.bwt(); }
  std::uint64_t node_count() const noexcept { return graph.node_count(); }
  std::size_t read_count() const noexcept { return read_lengths.size(); }
};

using WheelerPathIndex = PathIndex;
using RelaxedIndex = PathIndex;

struct PathIndexOptions {
  bool witness_table = true;
};

/// Run-length BWT of a layout: outgoing labels in rank order, sinks skipped.
RunLengthBWT layout_bwt(const ReadCollection& reads, const PathLayout& layout);

PathIndex assemble_path_index(IndexKind kind, const ReadCollection& reads, const PathLayout& layout,
                              ContextAssignment contexts, PathIndexOptions options = {});

/// Number of stored breaks allowed per (rho + r): causes are run ends, the
/// last symbol, sources between LF images, sink LF images and read starts.
inline constexpr std::size_t kBreakTableFactor = 3;

}  // namespace rwg

#pragma once

#include <cstdint>
#include <vector>

#include "rwg/alphabet.hpp"
#include "rwg/graph_bwt.hpp"
#include "rwg/index_kind.hpp"
#include "rwg/lf.hpp"
#include "rwg/reads.hpp"

namespace rwg {

/// eBWT or BCR index: the LF mapping is a permutation with one cycle per
/// read, so the graph has no source or sink marks.
///
/// Rows keep the text position where their rotation starts (a full suffix
/// array). These baselines are not O(rho); they exist for comparison and to
/// show the false matches circular reads produce.
struct CycleIndex {
  IndexKind kind = IndexKind::ebwt;
  Alphabet alphabet;
  GraphBWT graph;
  LFPermutation lf;
  /// Start of each row's rotation; for BCR offset length+1 is the terminator.
  std::vector<TextPosition> row_start;
  std::vector<std::uint32_t> read_lengths;
  /// BCR only: terminator_order[k-1] is the read that owns $_k.
  std::vector<ReadId> terminator_order;

  const RunLengthBWT& bwt() const noexcept { return graph.bwt(); }
  std::size_t read_count() const noexcept { return read_lengths.size(); }
};

using EBWTIndex = CycleIndex;
using BCRIndex = CycleIndex;

/// Sorts all rotations of all reads in omega order, ties by (read id,
/// rotation offset). Throws DataError naming the first non-primitive read.
EBWTIndex build_ebwt(const ReadCollection& reads);

/// Read ids sorted by the lexicographic order of the reversed reads, ties by id.
std::vector<ReadId> colex_terminator_order(const ReadCollection& reads);

/// BWT of the cyclic rotations of read.$_k strings, terminators smallest and
/// ranked by `terminator_order`.
BCRIndex build_bcr(const ReadCollection& reads, const std::vector<ReadId>& terminator_order);
inline BCRIndex build_bcr(const ReadCollection& reads) { return build_bcr(reads, colex_terminator_order(reads)); }

/// BWT symbols with every terminator removed, re-run-length encoded.
RunLengthBWT strip_terminators(const RunLengthBWT& bwt, const Alphabet& alphabet);

}  // namespace rwg

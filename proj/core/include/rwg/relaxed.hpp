#pragma once

#include <cstdint>

#include "rwg/contexts.hpp"
#include "rwg/path_index.hpp"
#include "rwg/reads.hpp"

namespace rwg {

/// Relaxed ordering: node v_k of read R is ranked by the colexicographic
/// order of context(R) . R[1..k]; sources therefore land wherever their
/// context sorts. Ties use the same read tie rank as the strict path
/// builder, so empty contexts give exactly its ordering.
PathLayout layout_relaxed(const ReadCollection& reads, const ContextAssignment& contexts);

RelaxedIndex build_relaxed(const ReadCollection& reads, const ContextAssignment& contexts,
                           PathIndexOptions options = {});

struct RunStats {
  std::uint64_t rho = 0;
  std::uint64_t n = 0;  // total read length (BWT length for path kinds)
  std::uint64_t r = 0;
  std::uint64_t nodes = 0;

  bool operator==(const RunStats&) const = default;
};

RunStats run_count_report(const PathIndex& index);

}  // namespace rwg

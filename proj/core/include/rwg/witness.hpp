#pragma once

#include "rwg/contexts.hpp"
#include "rwg/graph_bwt.hpp"
#include "rwg/path_index.hpp"
#include "rwg/reads.hpp"

namespace rwg {

/// For each entry position b holding symbol c, the nearest copies of c
/// before and after b maximising the longest common suffix between their
/// true context (inside their read) and b's full context (imaginary context
/// followed by b's read prefix). Ties go to the copy closest to b.
///
/// Uses the colexicographic order of the BWT: the common suffix of two full
/// contexts is the minimum over the adjacent ones between them, so each scan
/// stops as soon as that running minimum cannot beat the best found.
WitnessPointerTable build_witness_table(const ReadCollection& reads, const PathLayout& layout,
                                        const ContextAssignment& contexts, const GraphBWT& graph);

}  // namespace rwg

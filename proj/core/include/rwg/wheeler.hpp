#pragma once

#include "rwg/path_index.hpp"
#include "rwg/reads.hpp"

namespace rwg {

/// Dollar-free Wheeler path ordering. Node v_k of a read is ranked by the
/// colexicographic order of read[1..k]; equal prefixes (and the sources,
/// whose prefix is empty and which therefore come first) are ordered by the
/// lexicographic rank of their reads. This reproduces the BCR BWT of the
/// reversed reads under colexicographic terminator order, minus terminators.
PathLayout layout_wheeler_paths(const ReadCollection& reads);

WheelerPathIndex build_wheeler_paths(const ReadCollection& reads, PathIndexOptions options = {});

}  // namespace rwg

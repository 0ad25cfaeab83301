#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rwg/reads.hpp"

namespace rwg {

enum class ContextSource : std::uint8_t { explicit_context = 0, genome = 1, overlap = 2, empty = 3 };

std::string_view to_string(ContextSource source);

/// One imaginary context per read, prepended conceptually when ordering the
/// read's nodes. Contexts contain regular symbols only.
struct ContextAssignment {
  std::vector<std::string> contexts;
  std::vector<ContextSource> provenance;
  /// Genome contexts: the read does not occur in the genome (context left empty).
  std::vector<bool> flagged;

  std::size_t size() const noexcept { return contexts.size(); }
  bool all_empty() const;
  bool operator==(const ContextAssignment&) const = default;
};

ContextAssignment empty_contexts(const ReadCollection& reads);

/// Contexts supplied by the caller, one per read, truncated to their last
/// `cap` symbols. Throws DataError on a count mismatch or foreign symbol.
ContextAssignment explicit_contexts(const ReadCollection& reads, std::vector<std::string> contexts,
                                    std::optional<std::size_t> cap = std::nullopt);

/// Context of a read = the genome prefix before its leftmost occurrence,
/// truncated to the last `cap` symbols (default: the longest read length).
/// Reads that do not occur get an empty context and are flagged.
ContextAssignment contexts_from_genome(const ReadCollection& reads, std::string_view genome,
                                       std::optional<std::size_t> cap = std::nullopt);

/// Context of read R = the part of the read Q != R preceding the longest
/// overlap where a suffix of Q equals a prefix of R. The overlap is at least
/// `min_overlap`, shorter than Q and no longer than R; ties go to the smaller
/// id. Single level: the context is never extended through Q's own context.
ContextAssignment contexts_from_overlaps(const ReadCollection& reads, std::size_t min_overlap,
                                         std::optional<std::size_t> cap = std::nullopt);

}  // namespace rwg

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "rwg/classic.hpp"
#include "rwg/path_index.hpp"

namespace rwg {

/// Search progress after `matched` symbols. Path indexes read the pattern
/// forwards over node ranks; cycle indexes read it backwards over rows.
struct SearchState {
  Interval interval;
  /// Text position of the first BWT symbol in the interval's slice (path
  /// indexes only); empty when the slice is empty.
  std::optional<TextPosition> toehold;
  std::uint32_t matched = 0;

  bool live() const noexcept { return !interval.empty(); }
};

/// Final character of a match. offset 0 means the match ends exactly at the
/// read start, i.e. entirely inside the imaginary context.
struct Occurrence {
  TextPosition position;
  bool is_true = false;

  bool operator==(const Occurrence&) const = default;
};

struct Certificate {
  std::uint64_t count = 0;
  std::optional<TextPosition> witness;

  bool operator==(const Certificate&) const = default;
};

using AnyIndex = std::variant<CycleIndex, PathIndex>;

IndexKind kind_of(const AnyIndex& index);
const Alphabet& alphabet_of(const AnyIndex& index);

/// Regular-symbol codes of a pattern. Throws DataError on foreign symbols.
std::vector<Symbol> encode_pattern(const Alphabet& alphabet, std::string_view pattern);

SearchState start_search(const PathIndex& index);
SearchState step(const PathIndex& index, const SearchState& state, Symbol c);

SearchState start_search(const CycleIndex& index);
/// Backward step: prepends c to the matched pattern suffix.
SearchState step(const CycleIndex& index, const SearchState& state, Symbol c);

/// Interval after each step, starting with the full range.
std::vector<Interval> search_trace(const PathIndex& index, std::string_view pattern);
std::vector<Interval> search_trace(const CycleIndex& index, std::string_view pattern);

/// Matches true and false; 0 when the pattern is longer than the text.
std::uint64_t count(const PathIndex& index, std::string_view pattern);
std::uint64_t count(const CycleIndex& index, std::string_view pattern);
std::uint64_t count(const AnyIndex& index, std::string_view pattern);

/// True iff the match ending at occ lies entirely inside its read.
inline bool classify_match(TextPosition occ, std::size_t m) noexcept { return occ.offset >= m; }

/// Text position of the BWT symbol after the one at x.
std::optional<TextPosition> next_position(const PathIndex& index, TextPosition x);

/// One occurrence per node (path) or row (cycle) of the final interval, in order.
std::vector<Occurrence> locate_all(const PathIndex& index, std::string_view pattern);
std::vector<Occurrence> locate_all(const CycleIndex& index, std::string_view pattern);
std::vector<Occurrence> locate_all(const AnyIndex& index, std::string_view pattern);

/// Count plus the final position of one true match, if any exists. Needs the
/// witness table; throws UsageError otherwise.
Certificate certify(const PathIndex& index, std::string_view pattern);

}  // namespace rwg

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rwg/alphabet.hpp"

namespace rwg {

using ReadId = std::uint32_t;

/// A character of the collection: read index (0-based) and 1-based offset.
struct TextPosition {
  ReadId read_id = 0;
  std::uint32_t offset = 0;

  auto operator<=>(const TextPosition&) const = default;
};

/// Ordered set of non-empty reads over one alphabet.
class ReadCollection {
 public:
  ReadCollection() = default;
  explicit ReadCollection(std::vector<std::string> reads, Alphabet alphabet = Alphabet::dna());

  std::size_t size() const noexcept { return reads_.size(); }
  bool empty() const noexcept { return reads_.empty(); }
  std::uint64_t total_length() const noexcept { return total_length_; }
  std::size_t max_length() const noexcept { return max_length_; }

  std::string_view read(ReadId id) const { return reads_.at(id); }
  std::uint32_t length(ReadId id) const { return static_cast<std::uint32_t>(reads_.at(id).size()); }
  /// Regular-symbol codes of the read (no terminators).
  std::span<const Symbol> encoded(ReadId id) const { return encoded_.at(id); }

  const std::vector<std::string>& reads() const noexcept { return reads_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  bool contains(TextPosition p) const noexcept {
    return p.read_id < reads_.size() && p.offset >= 1 && p.offset <= reads_[p.read_id].size();
  }
  /// Character at a text position.
  char at(TextPosition p) const { return reads_.at(p.read_id).at(p.offset - 1); }

 private:
  std::vector<std::string> reads_;
  std::vector<std::vector<Symbol>> encoded_;
  Alphabet alphabet_;
  std::uint64_t total_length_ = 0;
  std::size_t max_length_ = 0;
};

/// The same collection with every read reversed.
ReadCollection reversed(const ReadCollection& reads);

/// Read ids ordered by the lexicographic order of the reads, ties by id. This
/// is the tie rank shared by the path and relaxed builders.
std::vector<ReadId> lexicographic_read_order(const ReadCollection& reads);

}  // namespace rwg

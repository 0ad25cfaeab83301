#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rwg/alphabet.hpp"

namespace rwg {

struct Run {
  Symbol symbol = 0;
  std::uint64_t length = 0;

  bool operator==(const Run&) const = default;
};

/// A symbol sequence stored as its maximal runs, with rank/select/access.
///
/// Positions are 1-based. Every query is a binary search over O(rho) sampled
/// tables: the start of each run, and for each symbol the list of its runs
/// with the number of occurrences before each of them.
class RunLengthBWT {
 public:
  RunLengthBWT() = default;
  /// Merges adjacent equal-symbol runs; zero-length runs are rejected.
  explicit RunLengthBWT(std::vector<Run> runs);

  std::uint64_t size() const noexcept { return length_; }
  std::size_t rho() const noexcept { return runs_.size(); }
  const std::vector<Run>& runs() const noexcept { return runs_; }
  /// One past the largest symbol code present.
  std::size_t symbol_bound() const noexcept { return by_symbol_.size(); }

  Symbol at(std::uint64_t pos) const;
  /// Occurrences of c in the prefix of length pos, 0 <= pos <= size().
  std::uint64_t rank(Symbol c, std::uint64_t pos) const;
  /// Position of the k-th c, 1 <= k <= count(c).
  std::uint64_t select(Symbol c, std::uint64_t k) const;
  std::uint64_t count(Symbol c) const;

  /// 0-based index of the run containing pos.
  std::size_t run_index(std::uint64_t pos) const;
  std::uint64_t run_first(std::size_t run) const { return starts_.at(run); }
  std::uint64_t run_last(std::size_t run) const { return starts_.at(run) + runs_.at(run).length - 1; }

  std::vector<Symbol> decode() const;

  bool operator==(const RunLengthBWT& other) const { return runs_ == other.runs_; }

 private:
  struct SymbolRuns {
    std::vector<std::size_t> run;      // indices into runs_
    std::vector<std::uint64_t> before; // occurrences of the symbol before that run
    std::uint64_t total = 0;
  };

  std::vector<Run> runs_;
  std::vector<std::uint64_t> starts_;
  std::vector<SymbolRuns> by_symbol_;
  std::uint64_t length_ = 0;
};

RunLengthBWT rle_encode(std::span<const Symbol> seq);

}  // namespace rwg

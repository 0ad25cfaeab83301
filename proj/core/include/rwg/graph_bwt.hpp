#pragma once

#include <cstdint>
#include <vector>

#include "rwg/bitvector.hpp"
#include "rwg/rlbwt.hpp"

namespace rwg {

/// Inclusive 1-based range; empty when first > last.
struct Interval {
  std::uint64_t first = 1;
  std::uint64_t last = 0;

  bool empty() const noexcept { return first > last; }
  std::uint64_t width() const noexcept { return empty() ? 0 : last - first + 1; }
  bool contains(std::uint64_t x) const noexcept { return first <= x && x <= last; }
  bool operator==(const Interval&) const = default;
};

/// Navigation over a graph whose nodes have in- and out-degree at most one
/// (a union of labelled paths and cycles), stored as the edge labels in
/// origin-rank order plus in-degree-0 and out-degree-0 marks.
///
/// The k-th c-labelled edge in origin order enters the (C[c] + k)-th node
/// with positive in-degree; this is what makes forward stepping work and is
/// exactly the LF mapping when there are no marks.
class GraphBWT {
 public:
  GraphBWT() = default;
  /// Empty `sources`/`sinks` mean no node carries the mark.
  GraphBWT(RunLengthBWT bwt, BitVector sources, BitVector sinks);

  std::uint64_t node_count() const noexcept { return sources_.size(); }
  const RunLengthBWT& bwt() const noexcept { return bwt_; }
  const BitVector& sources() const noexcept { return sources_; }
  const BitVector& sinks() const noexcept { return sinks_; }

  bool is_source(std::uint64_t node) const { return sources_[node]; }
  bool is_sink(std::uint64_t node) const { return sinks_[node]; }

  /// Number of labels smaller than c.
  std::uint64_t symbol_base(Symbol c) const;

  Interval full() const noexcept { return {1, node_count()}; }
  /// BWT positions of the labels leaving nodes in `nodes`.
  Interval slice(Interval nodes) const;
  std::uint64_t origin(std::uint64_t bwt_pos) const { return sinks_.select0(bwt_pos); }
  std::uint64_t bwt_position(std::uint64_t node) const;
  std::uint64_t destination(std::uint64_t bwt_pos) const;

  /// Nodes reached by c-labelled edges leaving `nodes`, as the range from the
  /// destination of the first such edge to that of the last. Empty if none.
  Interval step(Interval nodes, Symbol c) const;

 private:
  RunLengthBWT bwt_;
  BitVector sources_;
  BitVector sinks_;
  std::vector<std::uint64_t> base_;
};

}  // namespace rwg

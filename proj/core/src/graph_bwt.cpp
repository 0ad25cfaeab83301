#include "rwg/graph_bwt.hpp"

#include <stdexcept>

namespace rwg {

GraphBWT::GraphBWT(RunLengthBWT bwt, BitVector sources, BitVector sinks)
    : bwt_(std::move(bwt)), sources_(std::move(sources)), sinks_(std::move(sinks)) {
  const std::uint64_t n = sources_.size() != 0 ? sources_.size() : (sinks_.size() != 0 ? sinks_.size() : bwt_.size());
  if (sources_.size() == 0) sources_ = BitVector(n);
  if (sinks_.size() == 0) sinks_ = BitVector(n);
  if (sources_.size() != n || sinks_.size() != n) throw std::invalid_argument("source/sink marks disagree on node count");
  if (bwt_.size() != n - sinks_.count_ones()) throw std::invalid_argument("one label per node with out-degree 1 expected");
  if (bwt_.size() != n - sources_.count_ones()) throw std::invalid_argument("one label per node with in-degree 1 expected");
  base_.assign(bwt_.symbol_bound() + 1, 0);
  for (Symbol c = 0; c < bwt_.symbol_bound(); ++c) base_[c + 1] = base_[c] + bwt_.count(c);
}

std::uint64_t GraphBWT::symbol_base(Symbol c) const {
  return c < base_.size() ? base_[c] : bwt_.size();
}

Interval GraphBWT::slice(Interval nodes) const {
  if (nodes.empty()) return {};
  return {sinks_.rank0(nodes.first - 1) + 1, sinks_.rank0(nodes.last)};
}

std::uint64_t GraphBWT::bwt_position(std::uint64_t node) const {
  if (sinks_[node]) throw std::logic_error("sink node has no outgoing label");
  return sinks_.rank0(node);
}

std::uint64_t GraphBWT::destination(std::uint64_t bwt_pos) const {
  const Symbol c = bwt_.at(bwt_pos);
  return sources_.select0(symbol_base(c) + bwt_.rank(c, bwt_pos));
}

Interval GraphBWT::step(Interval nodes, Symbol c) const {
  const Interval range = slice(nodes);
  if (range.empty()) return {};
  const std::uint64_t before = bwt_.rank(c, range.first - 1);
  const std::uint64_t through = bwt_.rank(c, range.last);
  if (through == before) return {};
  const std::uint64_t base = symbol_base(c);
  return {sources_.select0(base + before + 1), sources_.select0(base + through)};
}

}  // namespace rwg

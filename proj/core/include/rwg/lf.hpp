#pragma once

#include <cstdint>
#include <vector>

namespace rwg {

using Cycle = std::vector<std::uint32_t>;

/// A permutation on {1..N} given as mapping[i-1] = LF(i).
class LFPermutation {
 public:
  LFPermutation() = default;
  /// Throws std::invalid_argument unless the mapping is a bijection on {1..N}.
  explicit LFPermutation(std::vector<std::uint32_t> mapping);

  std::uint32_t operator()(std::uint32_t i) const { return mapping_.at(i - 1); }
  std::uint32_t domain_size() const noexcept { return static_cast<std::uint32_t>(mapping_.size()); }
  const std::vector<std::uint32_t>& mapping() const noexcept { return mapping_; }

  bool operator==(const LFPermutation&) const = default;

 private:
  std::vector<std::uint32_t> mapping_;
};

/// Disjoint cycles, each starting at its smallest element and listed in
/// mapping order, sorted by that smallest element.
std::vector<Cycle> cycle_decomposition(const LFPermutation& lf);

}  // namespace rwg

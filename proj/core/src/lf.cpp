#include "rwg/lf.hpp"

#include <stdexcept>

namespace rwg {

LFPermutation::LFPermutation(std::vector<std::uint32_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> hit(mapping_.size(), false);
  for (auto v : mapping_) {
    if (v == 0 || v > mapping_.size() || hit[v - 1]) throw std::invalid_argument("LF mapping is not a permutation");
    hit[v - 1] = true;
  }
}

std::vector<Cycle> cycle_decomposition(const LFPermutation& lf) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(lf.domain_size(), false);
  for (std::uint32_t start = 1; start <= lf.domain_size(); ++start) {
    if (seen[start - 1]) continue;
    Cycle cycle;
    for (std::uint32_t x = start; !seen[x - 1]; x = lf(x)) {
      seen[x - 1] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace rwg

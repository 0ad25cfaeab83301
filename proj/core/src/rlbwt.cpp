#include "rwg/rlbwt.hpp"

#include <algorithm>
#include <stdexcept>

namespace rwg {

RunLengthBWT::RunLengthBWT(std::vector<Run> runs) {
  for (const auto& run : runs) {
    if (run.length == 0) throw std::invalid_argument("run length must be positive");
    if (!runs_.empty() && runs_.back().symbol == run.symbol)
      runs_.back().length += run.length;
    else
      runs_.push_back(run);
  }
  starts_.reserve(runs_.size());
  std::uint64_t pos = 1;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    const auto& run = runs_[i];
    starts_.push_back(pos);
    pos += run.length;
    if (run.symbol >= by_symbol_.size()) by_symbol_.resize(run.symbol + 1);
    auto& sym = by_symbol_[run.symbol];
    sym.run.push_back(i);
    sym.before.push_back(sym.total);
    sym.total += run.length;
  }
  length_ = pos - 1;
}

RunLengthBWT rle_encode(std::span<const Symbol> seq) {
  std::vector<Run> runs;
  for (Symbol s : seq) {
    if (!runs.empty() && runs.back().symbol == s)
      ++runs.back().length;
    else
      runs.push_back({s, 1});
  }
  return RunLengthBWT(std::move(runs));
}

std::size_t RunLengthBWT::run_index(std::uint64_t pos) const {
  if (pos == 0 || pos > length_) throw std::out_of_range("BWT position out of range");
  auto it = std::upper_bound(starts_.begin(), starts_.end(), pos);
  return static_cast<std::size_t>(it - starts_.begin()) - 1;
}

Symbol RunLengthBWT::at(std::uint64_t pos) const { return runs_[run_index(pos)].symbol; }

std::uint64_t RunLengthBWT::count(Symbol c) const { return c < by_symbol_.size() ? by_symbol_[c].total : 0; }

std::uint64_t RunLengthBWT::rank(Symbol c, std::uint64_t pos) const {
  if (pos > length_) throw std::out_of_range("rank position out of range");
  if (pos == 0 || c >= by_symbol_.size()) return 0;
  const std::size_t here = run_index(pos);
  const auto& sym = by_symbol_[c];
  // last run of c at or before the run containing pos
  auto it = std::upper_bound(sym.run.begin(), sym.run.end(), here);
  if (it == sym.run.begin()) return 0;
  const auto k = static_cast<std::size_t>(it - sym.run.begin()) - 1;
  const std::size_t run = sym.run[k];
  if (run == here) return sym.before[k] + (pos - starts_[run] + 1);
  return sym.before[k] + runs_[run].length;
}

std::uint64_t RunLengthBWT::select(Symbol c, std::uint64_t k) const {
  if (k == 0 || k > count(c)) throw std::out_of_range("select rank out of range");
  const auto& sym = by_symbol_[c];
  auto it = std::upper_bound(sym.before.begin(), sym.before.end(), k - 1);
  const auto j = static_cast<std::size_t>(it - sym.before.begin()) - 1;
  return starts_[sym.run[j]] + (k - 1 - sym.before[j]);
}

std::vector<Symbol> RunLengthBWT::decode() const {
  std::vector<Symbol> out;
  out.reserve(length_);
  for (const auto& run : runs_) out.insert(out.end(), run.length, run.symbol);
  return out;
}

}  // namespace rwg

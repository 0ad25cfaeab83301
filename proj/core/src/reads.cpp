#include "rwg/reads.hpp"

#include <algorithm>
#include <numeric>

#include "rwg/error.hpp"

namespace rwg {

ReadCollection::ReadCollection(std::vector<std::string> reads, Alphabet alphabet)
    : reads_(std::move(reads)), alphabet_(alphabet.without_terminators()) {
  encoded_.reserve(reads_.size());
  for (std::size_t i = 0; i < reads_.size(); ++i) {
    if (reads_[i].empty()) throw DataError("read " + std::to_string(i) + " is empty");
    encoded_.push_back(alphabet_.encode(reads_[i]));
    total_length_ += reads_[i].size();
    max_length_ = std::max(max_length_, reads_[i].size());
  }
}

ReadCollection reversed(const ReadCollection& reads) {
  std::vector<std::string> out = reads.reads();
  for (auto& s : out) std::reverse(s.begin(), s.end());
  return ReadCollection(std::move(out), reads.alphabet());
}

std::vector<ReadId> lexicographic_read_order(const ReadCollection& reads) {
  std::vector<ReadId> ids(reads.size());
  std::iota(ids.begin(), ids.end(), ReadId{0});
  std::stable_sort(ids.begin(), ids.end(), [&](ReadId a, ReadId b) {
    auto x = reads.encoded(a);
    auto y = reads.encoded(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  return ids;
}

}  // namespace rwg

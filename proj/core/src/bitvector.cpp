#include "rwg/bitvector.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rwg {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) { finalize(); }

BitVector::BitVector(const std::vector<bool>& bits) : size_(bits.size()), words_((bits.size() + 63) / 64, 0) {
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) set(i + 1);
  finalize();
}

BitVector BitVector::from_positions(std::size_t size, std::span<const std::uint64_t> ones) {
  BitVector bv;
  bv.size_ = size;
  bv.words_.assign((size + 63) / 64, 0);
  for (auto p : ones) {
    if (p == 0 || p > size) throw std::out_of_range("bit position out of range");
    bv.set(p);
  }
  bv.finalize();
  return bv;
}

void BitVector::set(std::size_t pos) { words_[(pos - 1) / 64] |= std::uint64_t{1} << ((pos - 1) % 64); }

void BitVector::finalize() {
  const std::size_t blocks = (words_.size() + kWordsPerBlock - 1) / kWordsPerBlock;
  block_ranks_.assign(blocks + 1, 0);
  std::uint64_t running = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    block_ranks_[b] = running;
    const std::size_t end = std::min(words_.size(), (b + 1) * kWordsPerBlock);
    for (std::size_t w = b * kWordsPerBlock; w < end; ++w) running += std::popcount(words_[w]);
  }
  block_ranks_[blocks] = running;
  ones_ = running;
}

bool BitVector::operator[](std::size_t pos) const {
  if (pos == 0 || pos > size_) throw std::out_of_range("bit position out of range");
  return (words_[(pos - 1) / 64] >> ((pos - 1) % 64)) & 1U;
}

std::size_t BitVector::rank1(std::size_t pos) const {
  if (pos > size_) throw std::out_of_range("rank position out of range");
  if (pos == 0) return 0;
  const std::size_t word = pos / 64;
  const std::size_t block = word / kWordsPerBlock;
  std::size_t r = block_ranks_[block];
  for (std::size_t w = block * kWordsPerBlock; w < word; ++w) r += std::popcount(words_[w]);
  if (pos % 64 != 0) r += std::popcount(words_[word] & ((std::uint64_t{1} << (pos % 64)) - 1));
  return r;
}

template <bool Bit>
std::size_t BitVector::select(std::size_t k) const {
  const std::size_t total = Bit ? ones_ : size_ - ones_;
  if (k == 0 || k > total) throw std::out_of_range("select rank out of range");
  auto before = [&](std::size_t block) {
    const std::size_t ones = block_ranks_[block];
    return Bit ? ones : std::min(size_, block * kWordsPerBlock * 64) - ones;
  };
  // last block whose preceding count is < k
  std::size_t lo = 0, hi = block_ranks_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (before(mid) < k) lo = mid; else hi = mid;
  }
  std::size_t remaining = k - before(lo);
  for (std::size_t w = lo * kWordsPerBlock; w < words_.size(); ++w) {
    std::uint64_t word = Bit ? words_[w] : ~words_[w];
    if (!Bit && w + 1 == words_.size() && size_ % 64 != 0) word &= (std::uint64_t{1} << (size_ % 64)) - 1;
    const auto c = static_cast<std::size_t>(std::popcount(word));
    if (c < remaining) {
      remaining -= c;
      continue;
    }
    for (std::size_t i = 1; i < remaining; ++i) word &= word - 1;
    return w * 64 + static_cast<std::size_t>(std::countr_zero(word)) + 1;
  }
  throw std::logic_error("bitvector select ran past the end");
}

std::size_t BitVector::select1(std::size_t k) const { return select<true>(k); }
std::size_t BitVector::select0(std::size_t k) const { return select<false>(k); }

std::vector<std::uint64_t> BitVector::ones() const {
  std::vector<std::uint64_t> out;
  out.reserve(ones_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t word = words_[w]; word != 0; word &= word - 1)
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(word)) + 1);
  }
  return out;
}

}  // namespace rwg

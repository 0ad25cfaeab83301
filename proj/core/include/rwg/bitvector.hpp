#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rwg {

/// Plain bitvector with rank/select. Positions are 1-based: rank1(p) counts
/// set bits in [1, p], select1(k) returns the position of the k-th set bit.
/// Rank is O(1) via 512-bit superblock counts, select is a binary search
/// over superblocks followed by a word scan.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);
  explicit BitVector(const std::vector<bool>& bits);
  /// Bitvector of the given size with exactly the listed 1-based positions set.
  static BitVector from_positions(std::size_t size, std::span<const std::uint64_t> ones);

  std::size_t size() const noexcept { return size_; }
  std::size_t count_ones() const noexcept { return ones_; }
  std::size_t count_zeros() const noexcept { return size_ - ones_; }

  bool operator[](std::size_t pos) const;

  std::size_t rank1(std::size_t pos) const;
  std::size_t rank0(std::size_t pos) const { return pos - rank1(pos); }
  std::size_t select1(std::size_t k) const;
  std::size_t select0(std::size_t k) const;

  /// 1-based positions of all set bits, ascending.
  std::vector<std::uint64_t> ones() const;

  bool operator==(const BitVector& other) const { return size_ == other.size_ && words_ == other.words_; }

 private:
  void set(std::size_t pos);
  void finalize();
  template <bool Bit>
  std::size_t select(std::size_t k) const;

  static constexpr std::size_t kWordsPerBlock = 8;

  std::size_t size_ = 0;
  std::size_t ones_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> block_ranks_;  // ones before each 512-bit block
};

}  // namespace rwg

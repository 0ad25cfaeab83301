#include <doctest.h>

#include <random>

#include "rwg/bitvector.hpp"

using rwg::BitVector;

TEST_CASE("rank and select agree with a scan") {
  std::mt19937_64 rng(7);
  for (std::size_t size : {1, 5, 63, 64, 65, 511, 512, 513, 1500, 4100}) {
    for (double density : {0.0, 0.1, 0.5, 0.97, 1.0}) {
      std::vector<bool> bits(size);
      std::bernoulli_distribution coin(density);
      for (std::size_t i = 0; i < size; ++i) bits[i] = coin(rng);
      const BitVector b(bits);
      REQUIRE(b.size() == size);
      std::size_t ones = 0;
      for (std::size_t p = 1; p <= size; ++p) {
        CHECK(b[p] == bits[p - 1]);
        if (bits[p - 1]) {
          ++ones;
          CHECK(b.select1(ones) == p);
        } else {
          CHECK(b.select0(p - ones) == p);
        }
        CHECK(b.rank1(p) == ones);
        CHECK(b.rank0(p) == p - ones);
      }
      CHECK(b.rank1(0) == 0);
      CHECK(b.count_ones() == ones);
    }
  }
}

TEST_CASE("from_positions round trip") {
  const std::vector<std::uint64_t> ones{1, 4, 9, 700};
  const BitVector b = BitVector::from_positions(800, ones);
  CHECK(b.ones() == ones);
  CHECK(b.count_ones() == 4);
  CHECK(b.count_zeros() == 796);
  CHECK(b == BitVector::from_positions(800, ones));
}

TEST_CASE("out of range access throws") {
  const BitVector b(10);
  CHECK_THROWS(b[11]);
  CHECK_THROWS(b.select1(1));
  CHECK(b.select0(10) == 10);
}

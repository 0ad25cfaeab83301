#include <doctest.h>

#include "rwg/lf.hpp"

using namespace rwg;

TEST_CASE("cycle decomposition") {
  const LFPermutation lf({3, 1, 2, 5, 4, 6});
  CHECK(lf(1) == 3);
  const auto cycles = cycle_decomposition(lf);
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0] == Cycle{1, 3, 2});
  CHECK(cycles[1] == Cycle{4, 5});
  CHECK(cycles[2] == Cycle{6});
}

TEST_CASE("non-bijections are rejected") {
  CHECK_THROWS(LFPermutation({1, 1}));
  CHECK_THROWS(LFPermutation({0, 1}));
  CHECK_THROWS(LFPermutation({3, 1}));
}

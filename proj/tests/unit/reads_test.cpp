#include <doctest.h>

#include "example.hpp"
#include "rwg/error.hpp"
#include "rwg/reads.hpp"

using namespace rwg;

TEST_CASE("read collection basics") {
  const ReadCollection reads = testing::example_reads();
  CHECK(reads.size() == 5);
  CHECK(reads.total_length() == 27);
  CHECK(reads.max_length() == 6);
  CHECK(reads.at({2, 1}) == 'T');
  CHECK(reads.at({4, 6}) == 'T');
  CHECK(reads.contains({4, 6}));
  CHECK_FALSE(reads.contains({4, 7}));
  CHECK_FALSE(reads.contains({0, 0}));
  CHECK(reads.encoded(0).size() == 5);
}

TEST_CASE("reversed keeps read order") {
  const ReadCollection r = reversed(testing::example_reads());
  CHECK(r.read(0) == "ATTAG");
  CHECK(r.read(4) == "TACATA");
}

TEST_CASE("lexicographic read order breaks ties by id") {
  const ReadCollection reads({"GA", "AC", "GA", "A"});
  CHECK(lexicographic_read_order(reads) == std::vector<ReadId>{3, 1, 0, 2});
  CHECK(lexicographic_read_order(testing::example_reads()) == std::vector<ReadId>{4, 3, 0, 2, 1});
}

TEST_CASE("empty reads and foreign symbols are rejected") {
  CHECK_THROWS(ReadCollection({"GAT", ""}));
  CHECK_THROWS_AS(ReadCollection({"GANT"}), DataError);
}

TEST_CASE("text positions order by read then offset") {
  CHECK(TextPosition{0, 9} < TextPosition{1, 1});
  CHECK(TextPosition{1, 2} < TextPosition{1, 3});
}

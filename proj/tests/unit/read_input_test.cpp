#include <doctest.h>

#include "rwg/error.hpp"
#include "rwg/read_input.hpp"

using namespace rwg;

TEST_CASE("plain text reads") {
  CHECK(parse_reads("gatta\n\nTTAGA\r\n  TAG ATA\n", Alphabet::dna()) == std::vector<std::string>{"GATTA", "TTAGA", "TAGATA"});
}

TEST_CASE("fasta reads") {
  const std::string text = ">r1 first\nGAT\nta\n>r2\nTTAGA\n";
  CHECK(parse_reads(text, Alphabet::dna()) == std::vector<std::string>{"GATTA", "TTAGA"});
  CHECK_THROWS_AS(parse_reads(">r1\n>r2\nAC\n", Alphabet::dna()), DataError);
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(parse_reads("", Alphabet::dna()), DataError);
  CHECK_THROWS_AS(parse_reads("\n\n", Alphabet::dna()), DataError);
  try {
    parse_reads("GATTA\nGANTA\n", Alphabet::dna(), "reads.txt");
    FAIL("expected a DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("reads.txt:2") != std::string::npos);
  }
  CHECK(parse_reads("ab\n", Alphabet("AB")) == std::vector<std::string>{"AB"});
}

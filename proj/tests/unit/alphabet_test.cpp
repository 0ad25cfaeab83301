#include <doctest.h>

#include "rwg/alphabet.hpp"
#include "rwg/error.hpp"

using rwg::Alphabet;

TEST_CASE("dna codes follow symbol order") {
  const Alphabet a = Alphabet::dna();
  CHECK(a.size() == 4);
  CHECK(a.encode('A') < a.encode('C'));
  CHECK(a.encode('C') < a.encode('G'));
  CHECK(a.encode('G') < a.encode('T'));
  CHECK(a.to_char(a.encode('G')) == 'G');
  CHECK(a.render(a.encode("GATTA")) == "GATTA");
}

TEST_CASE("terminators sort below regular symbols") {
  const Alphabet a = Alphabet::dna().with_terminators(3);
  CHECK(a.size() == 7);
  CHECK(a.terminator(1) == 0);
  CHECK(a.terminator(3) == 2);
  CHECK(a.is_terminator(2));
  CHECK_FALSE(a.is_terminator(a.encode('A')));
  CHECK(a.encode('A') == 3);
  CHECK(a.render(a.terminator(2)) == "$2");
  CHECK(a.without_terminators() == Alphabet::dna());
}

TEST_CASE("custom alphabets keep the given order") {
  const Alphabet a("TGCA");
  CHECK(a.encode('T') < a.encode('A'));
  CHECK(a.contains('C'));
  CHECK_FALSE(a.contains('N'));
}

TEST_CASE("bad alphabets and foreign symbols are rejected") {
  CHECK_THROWS(Alphabet("AAC"));
  CHECK_THROWS(Alphabet("AC$"));
  CHECK_THROWS_AS(Alphabet::dna().encode('N'), rwg::DataError);
  CHECK_THROWS_AS(Alphabet::dna().encode("GANTA"), rwg::DataError);
}

#include <doctest.h>

#include "example.hpp"
#include "rwg/contexts.hpp"
#include "rwg/error.hpp"

using namespace rwg;

TEST_CASE("genome contexts of the example") {
  const ContextAssignment c = contexts_from_genome(testing::example_reads(), testing::kExampleGenome);
  CHECK(c.contexts == std::vector<std::string>{"", "GA", "GAT", "GATTA", "GATTAG"});
  CHECK(c.flagged == std::vector<bool>(5, false));
  CHECK(c.provenance == std::vector<ContextSource>(5, ContextSource::genome));
  CHECK_FALSE(c.all_empty());
}

TEST_CASE("genome contexts: cap and missing reads") {
  const ReadCollection reads({"CAT", "GGG"});
  const ContextAssignment c = contexts_from_genome(reads, "TTTTCAT", 2);
  CHECK(c.contexts == std::vector<std::string>{"TT", ""});
  CHECK(c.flagged == std::vector<bool>{false, true});
}

TEST_CASE("overlap contexts") {
  const ReadCollection reads({"GATTA", "TTAGA", "AGAC"});
  const ContextAssignment c = contexts_from_overlaps(reads, 2);
  // TTAGA: longest suffix of another read that is its prefix is TTA from GATTA
  CHECK(c.contexts[1] == "GA");
  // AGAC: AGA from TTAGA
  CHECK(c.contexts[2] == "TT");
  // GATTA: GA from TTAGA
  CHECK(c.contexts[0] == "TTA");
  CHECK(c.provenance[1] == ContextSource::overlap);
  const ContextAssignment strict = contexts_from_overlaps(reads, 4);
  CHECK(strict.all_empty());
}

TEST_CASE("explicit contexts") {
  const ReadCollection reads({"AC", "GT"});
  const ContextAssignment c = explicit_contexts(reads, {"TTTG", ""}, 2);
  CHECK(c.contexts == std::vector<std::string>{"TG", ""});
  CHECK_THROWS_AS(explicit_contexts(reads, {"A"}), DataError);
  CHECK_THROWS_AS(explicit_contexts(reads, {"AN", ""}), DataError);
  CHECK(empty_contexts(reads).all_empty());
}

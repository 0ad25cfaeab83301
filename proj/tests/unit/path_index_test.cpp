#include <doctest.h>

#include <random>
#include <set>

#include "example.hpp"
#include "rwg/relaxed.hpp"

using namespace rwg;

namespace {

// text position of the BWT symbol at p, from the builder's layout
TextPosition symbol_position(const PathIndex& idx, const PathLayout& layout, std::uint64_t p) {
  const NodeRef v = layout.nodes[idx.graph.origin(p) - 1];
  return {v.read_id, v.depth + 1};
}

void check_structure(const ReadCollection& reads, const ContextAssignment& ctx) {
  const PathLayout layout = layout_relaxed(reads, ctx);
  const RelaxedIndex idx = build_relaxed(reads, ctx);
  const RunLengthBWT& bwt = idx.bwt();
  const std::uint64_t n = bwt.size();

  REQUIRE(idx.toeholds.run_heads.size() == bwt.rho());
  for (std::size_t run = 0; run < bwt.rho(); ++run)
    CHECK(idx.toeholds.run_heads[run] == symbol_position(idx, layout, bwt.run_first(run)));
  CHECK(idx.toeholds.after_sink.size() <= reads.size());
  for (const auto& [p, pos] : idx.toeholds.after_sink) CHECK(pos == symbol_position(idx, layout, p));

  CHECK(idx.breaks.size() <= kBreakTableFactor * (bwt.rho() + reads.size()));
  std::set<TextPosition> seen;
  for (std::uint64_t p = 1; p <= n; ++p) {
    const TextPosition x = symbol_position(idx, layout, p);
    seen.insert(x);
    const auto next = idx.breaks.next(x);
    if (p == n) {
      CHECK_FALSE(next);
    } else {
      REQUIRE(next);
      CHECK(*next == symbol_position(idx, layout, p + 1));
    }
  }
  CHECK(seen.size() == n);

  REQUIRE(idx.witness);
  CHECK(idx.witness->run_boundary_entries() <= 2 * bwt.rho());
  CHECK(idx.witness->entries.size() <= 2 * bwt.rho() + 2 * reads.size());
  for (std::uint64_t v = 1; v <= idx.node_count(); ++v)
    if (idx.graph.is_sink(v)) {
      const NodeRef node = layout.nodes[v - 1];
      CHECK(idx.sink_reads[idx.graph.sinks().rank1(v) - 1] == node.read_id);
    }
}

}  // namespace

TEST_CASE("layout node origins") {
  const PathLayout layout{{{0, 0}, {0, 2}, {1, 1}}};
  CHECK_FALSE(layout.node_origin(1));
  CHECK(*layout.node_origin(2) == TextPosition{0, 2});
  CHECK(layout.node_count() == 3);
}

TEST_CASE("samples, breaks and witness entries on the example") {
  const ReadCollection reads = testing::example_reads();
  check_structure(reads, contexts_from_genome(reads, testing::kExampleGenome));
  check_structure(reads, empty_contexts(reads));
}

TEST_CASE("samples, breaks and witness entries on random inputs") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::string genome = testing::random_string(rng, testing::uniform(rng, 8, 80), "ACGT");
    const ReadCollection reads(testing::sample_reads(rng, genome, testing::uniform(rng, 1, 10), 1, 12));
    check_structure(reads, testing::random_contexts(rng, reads, genome, "ACGT"));
  }
}

TEST_CASE("break table lookups outside the table fail loudly") {
  const LFBreakTable t({{{0, 2}, TextPosition{1, 1}}});
  CHECK_THROWS(t.next({0, 1}));
  CHECK(*t.next({0, 4}) == TextPosition{1, 3});
  CHECK_THROWS(LFBreakTable({{{1, 1}, std::nullopt}, {{0, 1}, std::nullopt}}));
}

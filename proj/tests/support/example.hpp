#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rwg/contexts.hpp"
#include "rwg/reads.hpp"

namespace rwg::testing {

inline const std::vector<std::string> kExampleReads{"GATTA", "TTAGA", "TAGATA", "GATAC", "ATACAT"};
inline const std::string kExampleGenome = "GATTAGATACAT";

inline ReadCollection example_reads() { return ReadCollection(kExampleReads); }

inline std::string random_string(std::mt19937_64& rng, std::size_t len, std::string_view symbols) {
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s.push_back(symbols[pick(rng)]);
  return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Independent random reads; total length at most max_total.
inline std::vector<std::string> random_reads(std::mt19937_64& rng, std::size_t max_total, std::string_view symbols,
                                             std::size_t max_len = 12) {
  std::vector<std::string> reads;
  std::size_t total = 0;
  const std::size_t count = uniform(rng, 1, 8);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = uniform(rng, 1, max_len);
    if (total + len > max_total) break;
    reads.push_back(random_string(rng, len, symbols));
    total += len;
  }
  if (reads.empty()) reads.push_back(random_string(rng, 1, symbols));
  return reads;
}

/// Substrings of a genome, leftmost start uniform, so that contexts exist.
inline std::vector<std::string> sample_reads(std::mt19937_64& rng, const std::string& genome, std::size_t count,
                                             std::size_t min_len, std::size_t max_len) {
  std::vector<std::string> reads;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len = std::min(genome.size(), uniform(rng, min_len, max_len));
    reads.push_back(genome.substr(uniform(rng, 0, genome.size() - len), len));
  }
  return reads;
}

/// A mix of context sources: empty, genome, overlaps, or random strings.
inline ContextAssignment random_contexts(std::mt19937_64& rng, const ReadCollection& reads, const std::string& genome,
                                         std::string_view symbols) {
  switch (uniform(rng, 0, 3)) {
    case 0:
      return empty_contexts(reads);
    case 1:
      return contexts_from_genome(reads, genome);
    case 2:
      return contexts_from_overlaps(reads, uniform(rng, 1, 3));
    default: {
      std::vector<std::string> ctx;
      for (std::size_t i = 0; i < reads.size(); ++i) ctx.push_back(random_string(rng, uniform(rng, 0, 6), symbols));
      return explicit_contexts(reads, ctx);
    }
  }
}

}  // namespace rwg::testing

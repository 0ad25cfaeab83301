#include "rwg/contexts.hpp"

#include <algorithm>
#include <stdexcept>

#include "rwg/error.hpp"

namespace rwg {
namespace {

std::string last_symbols(std::string_view s, std::size_t cap) {
  return std::string(s.size() > cap ? s.substr(s.size() - cap) : s);
}

std::size_t default_cap(const ReadCollection& reads, std::optional<std::size_t> cap) {
  return cap.value_or(reads.max_length());
}

ContextAssignment sized(std::size_t r, ContextSource source) {
  ContextAssignment a;
  a.contexts.assign(r, {});
  a.provenance.assign(r, source);
  a.flagged.assign(r, false);
  return a;
}

}  // namespace

std::string_view to_string(ContextSource source) {
  switch (source) {
    case ContextSource::explicit_context: return "explicit";
    case ContextSource::genome: return "genome";
    case ContextSource::overlap: return "overlap";
    case ContextSource::empty: return "empty";
  }
  return "unknown";
}

bool ContextAssignment::all_empty() const {
  return std::all_of(contexts.begin(), contexts.end(), [](const std::string& c) { return c.empty(); });
}

ContextAssignment empty_contexts(const ReadCollection& reads) { return sized(reads.size(), ContextSource::empty); }

ContextAssignment explicit_contexts(const ReadCollection& reads, std::vector<std::string> contexts,
                                    std::optional<std::size_t> cap) {
  if (contexts.size() != reads.size())
    throw DataError("expected " + std::to_string(reads.size()) + " contexts, got " + std::to_string(contexts.size()));
  auto a = sized(reads.size(), ContextSource::explicit_context);
  const std::size_t limit = default_cap(reads, cap);
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    for (char c : contexts[i])
      if (!reads.alphabet().contains(c))
        throw DataError("context " + std::to_string(i) + " contains symbol '" + c + "' outside the alphabet");
    a.contexts[i] = last_symbols(contexts[i], limit);
  }
  return a;
}

ContextAssignment contexts_from_genome(const ReadCollection& reads, std::string_view genome,
                                       std::optional<std::size_t> cap) {
  for (char c : genome)
    if (!reads.alphabet().contains(c)) throw DataError(std::string("genome contains symbol '") + c + "' outside the alphabet");
  auto a = sized(reads.size(), ContextSource::genome);
  const std::size_t limit = default_cap(reads, cap);
  for (ReadId id = 0; id < reads.size(); ++id) {
    const auto at = genome.find(reads.read(id));
    if (at == std::string_view::npos) {
      a.provenance[id] = ContextSource::empty;
      a.flagged[id] = true;
      continue;
    }
    a.contexts[id] = last_symbols(genome.substr(0, at), limit);
  }
  return a;
}

ContextAssignment contexts_from_overlaps(const ReadCollection& reads, std::size_t min_overlap,
                                         std::optional<std::size_t> cap) {
  if (min_overlap < 1) throw std::invalid_argument("min_overlap must be at least 1");
  auto a = sized(reads.size(), ContextSource::empty);
  const std::size_t limit = default_cap(reads, cap);
  for (ReadId r = 0; r < reads.size(); ++r) {
    const std::string_view read = reads.read(r);
    std::size_t best = 0;
    std::optional<ReadId> from;
    for (ReadId q = 0; q < reads.size(); ++q) {
      if (q == r) continue;
      const std::string_view other = reads.read(q);
      const std::size_t longest = std::min(other.size() - 1, read.size());
      for (std::size_t len = longest; len >= std::max(min_overlap, best + 1); --len) {
        if (other.substr(other.size() - len) == read.substr(0, len)) {
          best = len;
          from = q;
          break;
        }
      }
    }
    if (from) {
      const std::string_view other = reads.read(*from);
      a.contexts[r] = last_symbols(other.substr(0, other.size() - best), limit);
      a.provenance[r] = ContextSource::overlap;
    }
  }
  return a;
}

}  // namespace rwg

#include "rwg/classic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rwg/error.hpp"
#include "rwg/omega.hpp"

namespace rwg {
namespace {

struct Rotation {
  ReadId read;
  std::uint32_t offset;  // 0-based start
};

// Shared tail of both builders: BWT symbols, explicit LF and row starts.
template <typename SymbolAt>
CycleIndex finish(IndexKind kind, Alphabet alphabet, const std::vector<Rotation>& rows,
                  const std::vector<std::uint32_t>& cycle_length, const std::vector<std::uint32_t>& first_row_of,
                  const ReadCollection& reads, SymbolAt symbol_at) {
  const std::size_t total = rows.size();
  std::vector<std::uint32_t> row_of(total);
  for (std::size_t i = 0; i < total; ++i) row_of[first_row_of[rows[i].read] + rows[i].offset] = static_cast<std::uint32_t>(i + 1);

  std::vector<Symbol> bwt(total);
  std::vector<std::uint32_t> lf(total);
  CycleIndex index;
  index.kind = kind;
  index.row_start.resize(total);
  for (std::size_t i = 0; i < total; ++i) {
    const auto [read, offset] = rows[i];
    const std::uint32_t len = cycle_length[read];
    const std::uint32_t prev = (offset + len - 1) % len;
    bwt[i] = symbol_at(read, prev);
    lf[i] = row_of[first_row_of[read] + prev];
    index.row_start[i] = TextPosition{read, offset + 1};
  }
  index.alphabet = std::move(alphabet);
  index.graph = GraphBWT(rle_encode(bwt), BitVector(), BitVector());
  index.lf = LFPermutation(std::move(lf));
  index.read_lengths.reserve(reads.size());
  for (ReadId id = 0; id < reads.size(); ++id) index.read_lengths.push_back(reads.length(id));
  return index;
}

std::vector<std::uint32_t> prefix_offsets(const std::vector<std::uint32_t>& lengths) {
  std::vector<std::uint32_t> first(lengths.size(), 0);
  for (std::size_t i = 1; i < lengths.size(); ++i) first[i] = first[i - 1] + lengths[i - 1];
  return first;
}

}  // namespace

EBWTIndex build_ebwt(const ReadCollection& reads) {
  std::vector<std::uint32_t> lengths;
  std::vector<Rotation> rows;
  for (ReadId id = 0; id < reads.size(); ++id) {
    if (!is_primitive(reads.encoded(id)))
      throw DataError("read " + std::to_string(id) + " (" + std::string(reads.read(id)) +
                      ") is not primitive; the eBWT needs primitive reads");
    lengths.push_back(reads.length(id));
    for (std::uint32_t k = 0; k < reads.length(id); ++k) rows.push_back({id, k});
  }

  auto omega_less = [&](const Rotation& a, const Rotation& b) {
    const auto u = reads.encoded(a.read);
    const auto v = reads.encoded(b.read);
    const std::size_t bound = fine_wilf_bound(u.size(), v.size());
    for (std::size_t i = 0; i < bound; ++i) {
      const Symbol x = u[(a.offset + i) % u.size()];
      const Symbol y = v[(b.offset + i) % v.size()];
      if (x != y) return x < y;
    }
    return a.read != b.read ? a.read < b.read : a.offset < b.offset;
  };
  std::sort(rows.begin(), rows.end(), omega_less);

  return finish(IndexKind::ebwt, reads.alphabet(), rows, lengths, prefix_offsets(lengths), reads,
                [&](ReadId read, std::uint32_t k) { return reads.encoded(read)[k]; });
}

std::vector<ReadId> colex_terminator_order(const ReadCollection& reads) {
  std::vector<ReadId> ids(reads.size());
  std::iota(ids.begin(), ids.end(), ReadId{0});
  std::stable_sort(ids.begin(), ids.end(), [&](ReadId a, ReadId b) {
    const auto x = reads.encoded(a);
    const auto y = reads.encoded(b);
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return ids;
}

BCRIndex build_bcr(const ReadCollection& reads, const std::vector<ReadId>& terminator_order) {
  const std::size_t r = reads.size();
  if (terminator_order.size() != r) throw std::invalid_argument("terminator order must list every read once");
  std::vector<std::uint32_t> terminator_of(r, UINT32_MAX);
  for (std::size_t k = 0; k < r; ++k) {
    const ReadId id = terminator_order[k];
    if (id >= r || terminator_of[id] != UINT32_MAX) throw std::invalid_argument("terminator order is not a permutation");
    terminator_of[id] = static_cast<std::uint32_t>(k);
  }

  const Alphabet alphabet = reads.alphabet().with_terminators(r);
  const auto shift = static_cast<Symbol>(r);
  // symbol k of read.$: regular codes are shifted above the r terminators
  auto symbol_at = [&](ReadId read, std::uint32_t k) -> Symbol {
    const auto s = reads.encoded(read);
    return k < s.size() ? s[k] + shift : static_cast<Symbol>(terminator_of[read]);
  };

  std::vector<std::uint32_t> lengths;
  std::vector<Rotation> rows;
  for (ReadId id = 0; id < r; ++id) {
    lengths.push_back(reads.length(id) + 1);
    for (std::uint32_t k = 0; k <= reads.length(id); ++k) rows.push_back({id, k});
  }
  // every rotation contains exactly one terminator, unique to its read, so
  // comparisons are decided no later than the first terminator reached
  std::sort(rows.begin(), rows.end(), [&](const Rotation& a, const Rotation& b) {
    const std::uint32_t la = lengths[a.read];
    const std::uint32_t lb = lengths[b.read];
    for (std::uint32_t i = 0;; ++i) {
      const Symbol x = symbol_at(a.read, (a.offset + i) % la);
      const Symbol y = symbol_at(b.read, (b.offset + i) % lb);
      if (x != y) return x < y;
      if (x < shift) return false;  // same terminator: same read, same rotation
    }
  });

  BCRIndex index = finish(IndexKind::bcr, alphabet, rows, lengths, prefix_offsets(lengths), reads, symbol_at);
  index.terminator_order = terminator_order;
  return index;
}

RunLengthBWT strip_terminators(const RunLengthBWT& bwt, const Alphabet& alphabet) {
  std::vector<Run> runs;
  const auto shift = static_cast<Symbol>(alphabet.terminator_count());
  for (const auto& run : bwt.runs())
    if (!alphabet.is_terminator(run.symbol)) runs.push_back({run.symbol - shift, run.length});
  return RunLengthBWT(std::move(runs));
}

}  // namespace rwg

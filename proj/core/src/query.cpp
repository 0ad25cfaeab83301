#include "rwg/query.hpp"

#include <stdexcept>

#include "rwg/error.hpp"

namespace rwg {

IndexKind kind_of(const AnyIndex& index) {
  return std::visit([](const auto& i) { return i.kind; }, index);
}

const Alphabet& alphabet_of(const AnyIndex& index) {
  return std::visit([](const auto& i) -> const Alphabet& { return i.alphabet; }, index);
}

std::vector<Symbol> encode_pattern(const Alphabet& alphabet, std::string_view pattern) {
  return alphabet.encode(pattern);
}

namespace {

SearchState dead(const SearchState& from) {
  SearchState s;
  s.matched = from.matched + 1;
  return s;
}

template <class Index>
std::vector<Interval> trace(const Index& index, const std::vector<Symbol>& codes, bool backward) {
  std::vector<Interval> out;
  SearchState state = start_search(index);
  out.push_back(state.interval);
  for (std::size_t k = 0; k < codes.size(); ++k) {
    state = step(index, state, codes[backward ? codes.size() - 1 - k : k]);
    out.push_back(state.interval);
  }
  return out;
}

SearchState run_search(const PathIndex& index, const std::vector<Symbol>& codes) {
  SearchState state = start_search(index);
  for (Symbol c : codes) {
    state = step(index, state, c);
    if (!state.live()) break;
  }
  return state;
}

SearchState run_search(const CycleIndex& index, const std::vector<Symbol>& codes) {
  SearchState state = start_search(index);
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) {
    state = step(index, state, *it);
    if (!state.live()) break;
  }
  return state;
}

}  // namespace

SearchState start_search(const PathIndex& index) {
  SearchState s;
  s.interval = index.graph.full();
  if (index.bwt().size() > 0) s.toehold = index.toeholds.run_heads.front();
  return s;
}

SearchState step(const PathIndex& index, const SearchState& state, Symbol c) {
  const GraphBWT& g = index.graph;
  const RunLengthBWT& bwt = g.bwt();
  if (!state.live() || c >= bwt.symbol_bound()) return dead(state);
  const Interval slice = g.slice(state.interval);
  if (slice.empty()) return dead(state);

  SearchState next;
  next.matched = state.matched + 1;
  next.interval = g.step(state.interval, c);
  if (next.interval.empty()) return next;

  // text position of the first c in the slice
  TextPosition src;
  if (bwt.at(slice.first) == c) {
    src = state.toehold.value();
  } else {
    const std::uint64_t q = bwt.select(c, bwt.rank(c, slice.first - 1) + 1);
    src = index.toeholds.run_heads[bwt.run_index(q)];
  }
  if (!g.is_sink(next.interval.first)) {
    next.toehold = TextPosition{src.read_id, src.offset + 1};
  } else {
    const Interval fresh = g.slice(next.interval);
    if (!fresh.empty()) {
      next.toehold = index.toeholds.after_sink_at(fresh.first);
      if (!next.toehold) throw std::logic_error("missing toehold sample after a sink");
    }
  }
  return next;
}

SearchState start_search(const CycleIndex& index) {
  SearchState s;
  s.interval = index.graph.full();
  return s;
}

SearchState step(const CycleIndex& index, const SearchState& state, Symbol c) {
  if (!state.live() || c >= index.bwt().symbol_bound()) return dead(state);
  SearchState next;
  next.matched = state.matched + 1;
  next.interval = index.graph.step(state.interval, c);
  return next;
}

std::vector<Interval> search_trace(const PathIndex& index, std::string_view pattern) {
  return trace(index, encode_pattern(index.alphabet, pattern), false);
}

std::vector<Interval> search_trace(const CycleIndex& index, std::string_view pattern) {
  return trace(index, encode_pattern(index.alphabet, pattern), true);
}

std::uint64_t count(const PathIndex& index, std::string_view pattern) {
  const auto codes = encode_pattern(index.alphabet, pattern);
  if (codes.size() > index.bwt().size()) return 0;
  return run_search(index, codes).interval.width();
}

std::uint64_t count(const CycleIndex& index, std::string_view pattern) {
  const auto codes = encode_pattern(index.alphabet, pattern);
  if (codes.size() > index.bwt().size()) return 0;
  return run_search(index, codes).interval.width();
}

std::uint64_t count(const AnyIndex& index, std::string_view pattern) {
  return std::visit([&](const auto& i) { return count(i, pattern); }, index);
}

std::optional<TextPosition> next_position(const PathIndex& index, TextPosition x) {
  return index.breaks.next(x);
}

std::vector<Occurrence> locate_all(const PathIndex& index, std::string_view pattern) {
  const auto codes = encode_pattern(index.alphabet, pattern);
  const std::size_t m = codes.size();
  std::vector<Occurrence> out;
  if (m > index.bwt().size()) return out;
  const SearchState state = run_search(index, codes);
  if (!state.live()) return out;

  const GraphBWT& g = index.graph;
  std::optional<TextPosition> x = state.toehold;
  bool used = false;
  out.reserve(state.interval.width());
  for (std::uint64_t node = state.interval.first; node <= state.interval.last; ++node) {
    TextPosition pos;
    if (g.is_sink(node)) {
      const ReadId id = index.sink_reads[g.sinks().rank1(node) - 1];
      pos = {id, index.read_lengths[id]};
    } else {
      if (used) x = next_position(index, *x);
      used = true;
      pos = {x.value().read_id, x->offset - 1};
    }
    out.push_back({pos, classify_match(pos, m)});
  }
  return out;
}

std::vector<Occurrence> locate_all(const CycleIndex& index, std::string_view pattern) {
  const auto codes = encode_pattern(index.alphabet, pattern);
  const std::size_t m = codes.size();
  std::vector<Occurrence> out;
  if (m > index.bwt().size()) return out;
  const SearchState state = run_search(index, codes);
  if (!state.live()) return out;
  const bool terminated = index.kind == IndexKind::bcr;
  for (std::uint64_t row = state.interval.first; row <= state.interval.last; ++row) {
    const TextPosition start = index.row_start[row - 1];
    const std::uint64_t len = index.read_lengths[start.read_id];
    const std::uint64_t cycle = len + (terminated ? 1 : 0);
    const std::uint64_t end = (start.offset - 1 + m - 1) % cycle + 1;
    out.push_back({{start.read_id, static_cast<std::uint32_t>(end)}, start.offset + m - 1 <= len});
  }
  return out;
}

std::vector<Occurrence> locate_all(const AnyIndex& index, std::string_view pattern) {
  return std::visit([&](const auto& i) { return locate_all(i, pattern); }, index);
}

Certificate certify(const PathIndex& index, std::string_view pattern) {
  if (!index.witness) throw UsageError("index was built without a witness table");
  const WitnessPointerTable& table = *index.witness;
  const auto codes = encode_pattern(index.alphabet, pattern);
  if (codes.size() > index.bwt().size()) return {};

  const GraphBWT& g = index.graph;
  const RunLengthBWT& bwt = g.bwt();

  // Candidate: a true match of the pattern prefix ending at `last`; `bwt_pos`
  // is the symbol after it in its read, absent when the match ends the read.
  struct Candidate {
    TextPosition last;
    std::optional<std::uint64_t> bwt_pos;
  };
  std::optional<Candidate> cand;
  auto land = [&](TextPosition last, std::uint64_t node) {
    Candidate next{last, std::nullopt};
    if (!g.is_sink(node)) next.bwt_pos = g.bwt_position(node);
    return next;
  };
  if (bwt.size() > 0) {
    const TextPosition first = index.toeholds.run_heads.front();
    cand = Candidate{{first.read_id, first.offset - 1}, 1};
  }

  SearchState state = start_search(index);
  for (Symbol c : codes) {
    const std::uint32_t t = state.matched;
    const Interval slice = g.slice(state.interval);
    const SearchState next = step(index, state, c);
    if (!next.live()) return {};

    if (cand && cand->bwt_pos && bwt.at(*cand->bwt_pos) == c) {
      cand = land({cand->last.read_id, cand->last.offset + 1}, g.destination(*cand->bwt_pos));
    } else if (cand) {
      // some copy of c inside the slice that the table describes
      const std::uint64_t b = bwt.select(c, bwt.rank(c, slice.first - 1) + 1);
      const std::size_t run = bwt.run_index(b);
      std::uint64_t at = b;
      if (b != bwt.run_first(run)) at = bwt.run_last(run);
      const WitnessEntry* entry = at <= slice.last ? table.find(at) : table.first_at_or_after(slice.first);
      if (entry == nullptr || entry->bwt_pos > slice.last || entry->symbol != c)
        throw std::logic_error("no witness entry for a symbol in the slice");

      auto usable = [&](const std::optional<WitnessTarget>& w) {
        return w && slice.contains(w->bwt_pos) && w->lcs >= t;
      };
      std::optional<std::pair<std::uint64_t, TextPosition>> pick;
      if (usable(entry->succ))
        pick.emplace(entry->succ->bwt_pos, entry->succ->position);
      else if (usable(entry->pred))
        pick.emplace(entry->pred->bwt_pos, entry->pred->position);
      else if (entry->position.offset - 1 >= t)
        pick.emplace(entry->bwt_pos, entry->position);
      if (pick)
        cand = land(pick->second, g.destination(pick->first));
      else
        cand.reset();
    }
    state = next;
  }

  Certificate out;
  out.count = state.interval.width();
  if (cand) {
    if (!classify_match(cand->last, codes.size())) throw std::logic_error("witness is not a true match");
    out.witness = cand->last;
  }
  return out;
}

}  // namespace rwg

#include "rwg/index_file.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "rwg/error.hpp"

namespace rwg {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

constexpr std::string_view kMagic = "RWGIDX01";

class Writer {
 public:
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void str(std::string_view s) {
    u64(s.size());
    out_.append(s);
  }
  void raw(std::string_view s) { out_.append(s); }
  void pos(TextPosition p) {
    u32(p.read_id);
    u32(p.offset);
  }
  void section(std::string_view tag, const Writer& body) {
    raw(tag);
    u64(body.out_.size());
    raw(body.out_);
  }
  const std::string& bytes() const { return out_; }

 private:
  void put(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(take(1)[0]); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::string str() { return std::string(take(count(1))); }
  std::string_view take(std::size_t n) {
    if (n > in_.size() - at_) throw DataError("index file truncated");
    std::string_view s = in_.substr(at_, n);
    at_ += n;
    return s;
  }
  TextPosition pos() {
    const std::uint32_t r = u32();
    return {r, u32()};
  }
  /// Element count that must fit in the remaining bytes at `width` each.
  std::uint64_t count(std::size_t width) {
    const std::uint64_t n = u64();
    if (width != 0 && n > (in_.size() - at_) / width) throw DataError("index file section length out of range");
    return n;
  }
  Reader section(std::string_view tag) {
    if (take(tag.size()) != tag) throw DataError("index file: expected section " + std::string(tag));
    return Reader(take(count(1)));
  }
  void finish() const {
    if (at_ != in_.size()) throw DataError("index file section has trailing bytes");
  }

 private:
  std::uint64_t get(int width) {
    const std::string_view s = take(static_cast<std::size_t>(width));
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[i])) << (8 * i);
    return v;
  }
  std::string_view in_;
  std::size_t at_ = 0;
};

void write_alphabet(Writer& w, const Alphabet& a) {
  Writer s;
  s.str(a.symbols());
  s.u64(a.terminator_count());
  w.section("ALPH", s);
}

Alphabet read_alphabet(Reader& r) {
  Reader s = r.section("ALPH");
  const std::string symbols = s.str();
  const std::uint64_t terminators = s.u64();
  s.finish();
  return Alphabet(symbols, terminators);
}

void write_bits(Writer& w, const BitVector& b) {
  const auto ones = b.ones();
  w.u64(b.size());
  w.u64(ones.size());
  for (auto p : ones) w.u64(p);
}

BitVector read_bits(Reader& r) {
  const std::uint64_t size = r.u64();
  std::vector<std::uint64_t> ones(r.count(8));
  for (auto& p : ones) {
    p = r.u64();
    if (p == 0 || p > size) throw DataError("index file mark out of range");
  }
  return BitVector::from_positions(size, ones);
}

void write_graph(Writer& w, const GraphBWT& g) {
  Writer runs;
  runs.u64(g.bwt().rho());
  for (const Run& run : g.bwt().runs()) {
    runs.u32(run.symbol);
    runs.u64(run.length);
  }
  w.section("RUNS", runs);
  Writer marks;
  write_bits(marks, g.sources());
  write_bits(marks, g.sinks());
  w.section("MARK", marks);
}

GraphBWT read_graph(Reader& r) {
  Reader runs = r.section("RUNS");
  std::vector<Run> v(runs.count(12));
  for (Run& run : v) {
    run.symbol = runs.u32();
    run.length = runs.u64();
  }
  runs.finish();
  Reader marks = r.section("MARK");
  BitVector sources = read_bits(marks);
  BitVector sinks = read_bits(marks);
  marks.finish();
  return GraphBWT(RunLengthBWT(std::move(v)), std::move(sources), std::move(sinks));
}

template <class T, class F>
void write_list(Writer& w, std::string_view tag, const std::vector<T>& items, F&& put) {
  Writer s;
  s.u64(items.size());
  for (const T& x : items) put(s, x);
  w.section(tag, s);
}

template <class T, class F>
std::vector<T> read_list(Reader& r, std::string_view tag, std::size_t width, F&& get) {
  Reader s = r.section(tag);
  std::vector<T> items;
  const std::uint64_t n = s.count(width);
  items.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) items.push_back(get(s));
  s.finish();
  return items;
}

void write_optional_target(Writer& w, const std::optional<WitnessTarget>& t) {
  w.u8(t ? 1 : 0);
  if (!t) return;
  w.u64(t->bwt_pos);
  w.pos(t->position);
  w.u32(t->lcs);
}

std::optional<WitnessTarget> read_optional_target(Reader& r) {
  if (r.u8() == 0) return std::nullopt;
  WitnessTarget t;
  t.bwt_pos = r.u64();
  t.position = r.pos();
  t.lcs = r.u32();
  return t;
}

void write_body(Writer& w, const CycleIndex& index) {
  write_alphabet(w, index.alphabet);
  write_graph(w, index.graph);
  write_list(w, "LFMP", index.lf.mapping(), [](Writer& s, std::uint32_t v) { s.u32(v); });
  write_list(w, "ROWS", index.row_start, [](Writer& s, TextPosition p) { s.pos(p); });
  write_list(w, "LENS", index.read_lengths, [](Writer& s, std::uint32_t v) { s.u32(v); });
  write_list(w, "TORD", index.terminator_order, [](Writer& s, ReadId v) { s.u32(v); });
}

void write_body(Writer& w, const PathIndex& index) {
  write_alphabet(w, index.alphabet);
  write_graph(w, index.graph);
  write_list(w, "LENS", index.read_lengths, [](Writer& s, std::uint32_t v) { s.u32(v); });
  write_list(w, "SINK", index.sink_reads, [](Writer& s, ReadId v) { s.u32(v); });
  write_list(w, "HEAD", index.toeholds.run_heads, [](Writer& s, TextPosition p) { s.pos(p); });
  write_list(w, "AFTS", index.toeholds.after_sink, [](Writer& s, const auto& e) {
    s.u64(e.first);
    s.pos(e.second);
  });
  write_list(w, "BRKS", index.breaks.entries(), [](Writer& s, const BreakEntry& e) {
    s.pos(e.at);
    s.u8(e.next ? 1 : 0);
    if (e.next) s.pos(*e.next);
  });
  Writer wit;
  wit.u8(index.witness ? 1 : 0);
  if (index.witness) {
    wit.u64(index.witness->entries.size());
    for (const WitnessEntry& e : index.witness->entries) {
      wit.u64(e.bwt_pos);
      wit.u32(e.symbol);
      wit.pos(e.position);
      write_optional_target(wit, e.pred);
      write_optional_target(wit, e.succ);
      wit.u8(e.run_boundary ? 1 : 0);
    }
  }
  w.section("WITN", wit);
  Writer ctx;
  const ContextAssignment& c = index.contexts;
  ctx.u64(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    ctx.str(c.contexts[i]);
    ctx.u8(static_cast<std::uint8_t>(c.provenance[i]));
    ctx.u8(c.flagged[i] ? 1 : 0);
  }
  w.section("CTXS", ctx);
}

CycleIndex read_cycle(Reader& r, IndexKind kind) {
  CycleIndex index;
  index.kind = kind;
  index.alphabet = read_alphabet(r);
  index.graph = read_graph(r);
  index.lf = LFPermutation(read_list<std::uint32_t>(r, "LFMP", 4, [](Reader& s) { return s.u32(); }));
  index.row_start = read_list<TextPosition>(r, "ROWS", 8, [](Reader& s) { return s.pos(); });
  index.read_lengths = read_list<std::uint32_t>(r, "LENS", 4, [](Reader& s) { return s.u32(); });
  index.terminator_order = read_list<ReadId>(r, "TORD", 4, [](Reader& s) { return s.u32(); });
  if (index.row_start.size() != index.graph.node_count() || index.lf.domain_size() != index.graph.node_count())
    throw DataError("index file: row tables disagree with the BWT");
  for (TextPosition p : index.row_start)
    if (p.read_id >= index.read_lengths.size()) throw DataError("index file: row refers to a missing read");
  return index;
}

PathIndex read_path(Reader& r, IndexKind kind) {
  PathIndex index;
  index.kind = kind;
  index.alphabet = read_alphabet(r);
  index.graph = read_graph(r);
  index.read_lengths = read_list<std::uint32_t>(r, "LENS", 4, [](Reader& s) { return s.u32(); });
  index.sink_reads = read_list<ReadId>(r, "SINK", 4, [](Reader& s) { return s.u32(); });
  index.toeholds.run_heads = read_list<TextPosition>(r, "HEAD", 8, [](Reader& s) { return s.pos(); });
  index.toeholds.after_sink = read_list<std::pair<std::uint64_t, TextPosition>>(r, "AFTS", 16, [](Reader& s) {
    const std::uint64_t at = s.u64();
    return std::pair{at, s.pos()};
  });
  index.breaks = LFBreakTable(read_list<BreakEntry>(r, "BRKS", 9, [](Reader& s) {
    BreakEntry e;
    e.at = s.pos();
    if (s.u8() != 0) e.next = s.pos();
    return e;
  }));
  Reader wit = r.section("WITN");
  if (wit.u8() != 0) {
    WitnessPointerTable table;
    const std::uint64_t n = wit.count(20);
    for (std::uint64_t i = 0; i < n; ++i) {
      WitnessEntry e;
      e.bwt_pos = wit.u64();
      e.symbol = wit.u32();
      e.position = wit.pos();
      e.pred = read_optional_target(wit);
      e.succ = read_optional_target(wit);
      e.run_boundary = wit.u8() != 0;
      table.entries.push_back(e);
    }
    index.witness = std::move(table);
  }
  wit.finish();
  Reader ctx = r.section("CTXS");
  const std::uint64_t n = ctx.count(10);
  for (std::uint64_t i = 0; i < n; ++i) {
    index.contexts.contexts.push_back(ctx.str());
    const std::uint8_t source = ctx.u8();
    if (source > static_cast<std::uint8_t>(ContextSource::empty)) throw DataError("index file: unknown context source");
    index.contexts.provenance.push_back(static_cast<ContextSource>(source));
    index.contexts.flagged.push_back(ctx.u8() != 0);
  }
  ctx.finish();

  const std::size_t reads = index.read_lengths.size();
  if (index.sink_reads.size() != reads || index.contexts.size() != reads ||
      index.graph.sinks().count_ones() != reads || index.toeholds.run_heads.size() != index.bwt().rho())
    throw DataError("index file: path tables disagree with the BWT");
  for (ReadId id : index.sink_reads)
    if (id >= reads) throw DataError("index file: sink refers to a missing read");
  return index;
}

}  // namespace

std::string serialize_index(const AnyIndex& index) {
  Writer w;
  w.raw(kMagic);
  w.u32(kIndexFormatVersion);
  w.u8(static_cast<std::uint8_t>(kind_of(index)));
  std::visit([&](const auto& i) { write_body(w, i); }, index);
  w.u64(fnv1a64(w.bytes()));
  return w.bytes();
}

AnyIndex deserialize_index(std::string_view bytes) {
  if (bytes.size() < kMagic.size() + 4 + 1 + 8 || bytes.substr(0, kMagic.size()) != kMagic)
    throw DataError("not an index file (bad magic)");
  const std::string_view body = bytes.substr(0, bytes.size() - 8);
  Reader tail(bytes.substr(bytes.size() - 8));
  if (tail.u64() != fnv1a64(body)) throw DataError("index file checksum mismatch (corrupted file)");

  Reader r(body);
  r.take(kMagic.size());
  const std::uint32_t version = r.u32();
  if (version != kIndexFormatVersion)
    throw DataError("index file version " + std::to_string(version) + " is not supported (expected " +
                    std::to_string(kIndexFormatVersion) + ")");
  const std::uint8_t raw_kind = r.u8();
  if (raw_kind > static_cast<std::uint8_t>(IndexKind::relaxed)) throw DataError("index file: unknown index kind");
  const auto kind = static_cast<IndexKind>(raw_kind);
  try {
    AnyIndex out = is_cycle_kind(kind) ? AnyIndex(read_cycle(r, kind)) : AnyIndex(read_path(r, kind));
    r.finish();
    return out;
  } catch (const DataError&) {
    throw;
  } catch (const std::exception& e) {
    throw DataError(std::string("index file inconsistent: ") + e.what());
  }
}

void save_index(const AnyIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  const std::string bytes = serialize_index(index);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("failed writing " + path.string());
}

AnyIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_index(bytes);
}

}  // namespace rwg

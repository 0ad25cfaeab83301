#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "rwg/classic.hpp"
#include "rwg/error.hpp"
#include "rwg/graph.hpp"
#include "rwg/index_file.hpp"
#include "rwg/omega.hpp"
#include "rwg/oracle.hpp"
#include "rwg/query.hpp"
#include "rwg/read_input.hpp"
#include "rwg/relaxed.hpp"
#include "rwg/wheeler.hpp"

namespace rwg::cli {

namespace {

struct BuildFlags {
  std::string input;
  std::string mode = "relaxed";
  std::string context = "none";
  std::string genome;
  std::string context_file;
  std::size_t min_overlap = 1;
  std::optional<std::size_t> context_cap;
  std::string alphabet = "ACGT";
  std::string out;
};

struct QueryFlags {
  std::string index;
  std::string pattern;
  bool count = false;
  bool locate = false;
  bool witness = false;
  bool include_false = false;
};

struct VerifyFlags {
  BuildFlags build;
  std::string patterns;
  std::string random;
  std::uint64_t seed = 1;
  std::string index;
};

void add_build_options(CLI::App& cmd, BuildFlags& f, bool mode_all) {
  cmd.add_option("--mode", f.mode, mode_all ? "ebwt|bcr|paths|relaxed|all" : "ebwt|bcr|paths|relaxed")
      ->check(CLI::IsMember(mode_all ? std::vector<std::string>{"ebwt", "bcr", "paths", "relaxed", "all"}
                                     : std::vector<std::string>{"ebwt", "bcr", "paths", "relaxed"}));
  cmd.add_option("--context", f.context, "imaginary contexts for relaxed mode")
      ->check(CLI::IsMember({"none", "genome", "overlap", "file"}));
  cmd.add_option("--genome", f.genome, "genome for --context genome");
  cmd.add_option("--context-file", f.context_file, "one context per line for --context file");
  cmd.add_option("--min-overlap", f.min_overlap, "shortest overlap for --context overlap");
  cmd.add_option("--context-cap", f.context_cap, "keep only the last L context symbols");
  cmd.add_option("--alphabet", f.alphabet, "ordered symbol set");
}

ContextAssignment make_contexts(const BuildFlags& f, const ReadCollection& reads) {
  if (f.context == "genome") {
    if (f.genome.empty()) throw UsageError("--context genome needs --genome");
    return contexts_from_genome(reads, read_genome(f.genome, reads.alphabet()), f.context_cap);
  }
  if (f.context == "overlap") {
    if (f.min_overlap == 0) throw UsageError("--min-overlap must be at least 1");
    return contexts_from_overlaps(reads, f.min_overlap, f.context_cap);
  }
  if (f.context == "file") {
    if (f.context_file.empty()) throw UsageError("--context file needs --context-file");
    return explicit_contexts(reads, read_context_lines(f.context_file, reads.alphabet()), f.context_cap);
  }
  return empty_contexts(reads);
}

void check_flags(const BuildFlags& f, const std::string& mode, const CLI::App& cmd) {
  const bool relaxed = mode == "relaxed" || mode == "all";
  const bool context_flags = cmd.count("--genome") + cmd.count("--context-file") + cmd.count("--min-overlap") +
                                 cmd.count("--context-cap") >
                             0;
  if (!relaxed && (f.context != "none" || context_flags))
    throw UsageError("context options apply to --mode relaxed only");
  if (f.context != "genome" && cmd.count("--genome") > 0) throw UsageError("--genome requires --context genome");
  if (f.context != "file" && cmd.count("--context-file") > 0) throw UsageError("--context-file requires --context file");
  if (f.context != "overlap" && cmd.count("--min-overlap") > 0) throw UsageError("--min-overlap requires --context overlap");
}

AnyIndex build(const std::string& mode, const ReadCollection& reads, const ContextAssignment& contexts) {
  if (mode == "ebwt") return build_ebwt(reads);
  if (mode == "bcr") return build_bcr(reads);
  if (mode == "paths") return build_wheeler_paths(reads);
  return build_relaxed(reads, contexts);
}

std::string provenance(const ContextAssignment& c) {
  std::set<std::string_view> kinds;
  for (std::size_t i = 0; i < c.size(); ++i)
    kinds.insert(to_string(c.provenance[i]));
  std::string out;
  for (auto k : kinds) out += (out.empty() ? "" : ",") + std::string(k);
  return out;
}

void print_stats(const AnyIndex& any, std::ostream& out) {
  out << "kind=" << to_string(kind_of(any)) << '\n';
  std::visit(
      [&](const auto& index) {
        out << "rho=" << index.bwt().rho() << '\n';
        out << "n=" << index.bwt().size() << '\n';
        out << "r=" << index.read_count() << '\n';
        out << "N=" << index.graph.node_count() << '\n';
      },
      any);
  if (const auto* p = std::get_if<PathIndex>(&any)) {
    std::size_t flagged = 0;
    for (bool f : p->contexts.flagged) flagged += f ? 1 : 0;
    out << "contexts=" << provenance(p->contexts) << '\n';
    out << "contexts_flagged=" << flagged << '\n';
    out << "toehold_samples=" << p->toeholds.run_heads.size() << '\n';
    out << "sink_samples=" << p->toeholds.after_sink.size() << '\n';
    out << "break_entries=" << p->breaks.size() << '\n';
    out << "witness_entries=" << (p->witness ? p->witness->entries.size() : 0) << '\n';
  } else {
    out << "contexts=none\n";
  }
}

int cmd_build(const BuildFlags& f, const CLI::App& cmd, std::ostream& out) {
  check_flags(f, f.mode, cmd);
  if (f.mode == "relaxed" && f.context == "none" && cmd.count("--context-cap") > 0)
    throw UsageError("--context-cap needs a context source");
  const ReadCollection reads(read_reads(f.input, Alphabet(f.alphabet)), Alphabet(f.alphabet));
  const AnyIndex index = build(f.mode, reads, make_contexts(f, reads));
  save_index(index, f.out);
  print_stats(index, out);
  return ok;
}

int cmd_query(const QueryFlags& f, std::ostream& out) {
  const int modes = (f.count ? 1 : 0) + (f.locate ? 1 : 0) + (f.witness ? 1 : 0);
  if (modes != 1) throw UsageError("choose exactly one of --count, --locate, --witness");
  if (f.pattern.empty()) throw UsageError("--pattern must not be empty");
  const AnyIndex index = load_index(f.index);
  for (char ch : f.pattern)
    if (!alphabet_of(index).contains(ch))
      throw UsageError("pattern symbol '" + std::string(1, ch) + "' is not in the index alphabet");

  if (f.count) {
    const auto occ = locate_all(index, f.pattern);
    out << "total=" << count(index, f.pattern) << '\n';
    out << "true=" << std::count_if(occ.begin(), occ.end(), [](const Occurrence& o) { return o.is_true; }) << '\n';
  } else if (f.locate) {
    for (const Occurrence& o : locate_all(index, f.pattern))
      if (o.is_true || f.include_false)
        out << o.position.read_id << '\t' << o.position.offset << '\t' << (o.is_true ? "true" : "false") << '\n';
  } else {
    const auto* p = std::get_if<PathIndex>(&index);
    if (p == nullptr) throw UsageError("--witness needs a paths or relaxed index");
    const Certificate c = certify(*p, f.pattern);
    if (c.witness)
      out << c.witness->read_id << '\t' << c.witness->offset << '\n';
    else
      out << "none\n";
  }
  return ok;
}

// --- verify -----------------------------------------------------------------

using PositionSet = std::set<std::pair<std::size_t, std::size_t>>;

std::vector<std::string> load_patterns(const VerifyFlags& f, const ReadCollection& reads, std::ostream& err) {
  std::vector<std::string> patterns;
  if (!f.patterns.empty()) {
    std::istringstream in(read_file(f.patterns));
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) patterns.push_back(line);
    }
  }
  if (!f.random.empty()) {
    const auto comma = f.random.find(',');
    std::size_t n = 0;
    std::size_t len = 0;
    try {
      n = std::stoul(f.random.substr(0, comma));
      len = comma == std::string::npos ? 8 : std::stoul(f.random.substr(comma + 1));
    } catch (const std::exception&) {
      throw UsageError("--random expects COUNT,LEN");
    }
    if (len == 0) throw UsageError("--random pattern length must be positive");
    std::mt19937_64 rng(f.seed);
    const std::string_view symbols = reads.alphabet().symbols();
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t m = std::uniform_int_distribution<std::size_t>(1, len)(rng);
      std::string p;
      const auto& read = reads.reads()[std::uniform_int_distribution<std::size_t>(0, reads.size() - 1)(rng)];
      if (k % 2 == 0 && read.size() >= m) {
        p = read.substr(std::uniform_int_distribution<std::size_t>(0, read.size() - m)(rng), m);
      } else {
        for (std::size_t i = 0; i < m; ++i)
          p.push_back(symbols[std::uniform_int_distribution<std::size_t>(0, symbols.size() - 1)(rng)]);
      }
      patterns.push_back(p);
    }
  }
  if (patterns.empty()) err << "verify: no patterns given, checking BWTs only\n";
  return patterns;
}

struct Verifier {
  const ReadCollection& reads;
  std::ostream& err;
  std::size_t failures = 0;

  void fail(const std::string& mode, const std::string& what) {
    ++failures;
    err << "MISMATCH [" << mode << "] " << what << '\n';
  }

  std::string expected_bwt(const std::string& mode, const AnyIndex& index, const ContextAssignment& contexts) {
    if (mode == "ebwt") return oracle::naive_ebwt(reads.reads());
    if (mode == "bcr") {
      const auto& order = std::get<CycleIndex>(index).terminator_order;
      return oracle::join(oracle::naive_bcr(reads.reads(), std::vector<std::size_t>(order.begin(), order.end())));
    }
    std::vector<std::string> ctx = contexts.contexts;
    if (mode == "paths") ctx.assign(reads.size(), "");
    return oracle::naive_relaxed_bwt(reads.reads(), ctx).bwt;
  }

  void check_index(const std::string& mode, const AnyIndex& index, const ContextAssignment& contexts,
                   const std::vector<std::string>& patterns) {
    const std::string got = std::visit([](const auto& i) { return i.alphabet.render(i.bwt().decode()); }, index);
    const std::string want = expected_bwt(mode, index, contexts);
    if (got != want) fail(mode, "BWT " + got + " != oracle " + want);

    if (mode == "bcr") {
      const auto& order = std::get<CycleIndex>(index).terminator_order;
      const auto want_order = oracle::naive_colex_order(reads.reads());
      if (!std::equal(order.begin(), order.end(), want_order.begin(), want_order.end()))
        fail(mode, "terminator order differs from the oracle's colexicographic order");
    }
    if (const auto* p = std::get_if<PathIndex>(&index)) {
      const PathLayout layout = mode == "paths" ? layout_wheeler_paths(reads) : layout_relaxed(reads, contexts);
      if (auto v = verify_wheeler(reads_to_path_graph(reads), layout.rank_of_path_nodes(reads), mode == "relaxed"))
        fail(mode, "ordering is not Wheeler: " + v->describe());
      (void)p;
    }

    for (const std::string& pattern : patterns) check_pattern(mode, index, pattern);
  }

  void check_pattern(const std::string& mode, const AnyIndex& index, const std::string& pattern) {
    PositionSet want;
    for (const auto& m : oracle::naive_find_all(reads.reads(), pattern)) want.emplace(m.read_id, m.end);
    const auto occ = locate_all(index, pattern);
    const std::uint64_t total = count(index, pattern);
    PositionSet got;
    for (const auto& o : occ)
      if (o.is_true && !got.emplace(o.position.read_id, o.position.offset).second)
        fail(mode, pattern + ": duplicate true occurrence");
    if (got != want) fail(mode, pattern + ": true occurrences differ from oracle");
    if (total != occ.size()) fail(mode, pattern + ": count differs from located occurrences");
    const bool strict = mode == "paths" || mode == "bcr";
    if (strict && total != want.size()) fail(mode, pattern + ": strict index reported false matches");
    if (const auto* p = std::get_if<PathIndex>(&index)) {
      const Certificate c = certify(*p, pattern);
      if (c.count != total) fail(mode, pattern + ": certify count differs");
      if (c.witness.has_value() != !want.empty()) fail(mode, pattern + ": witness presence differs from oracle");
      if (c.witness && want.count({c.witness->read_id, c.witness->offset}) == 0)
        fail(mode, pattern + ": witness is not a true match");
    }
  }
};

int cmd_verify(const VerifyFlags& f, const CLI::App& cmd, std::ostream& out, std::ostream& err) {
  check_flags(f.build, f.build.mode, cmd);
  const Alphabet alphabet(f.build.alphabet);
  const ReadCollection reads(read_reads(f.build.input, alphabet), alphabet);
  const ContextAssignment contexts = make_contexts(f.build, reads);
  const auto patterns = load_patterns(f, reads, err);

  std::vector<std::string> modes{f.build.mode};
  if (f.build.mode == "all") modes = {"ebwt", "bcr", "paths", "relaxed"};
  Verifier v{reads, err};
  for (const auto& mode : modes) {
    if (mode == "ebwt") {
      bool primitive = true;
      for (ReadId id = 0; id < reads.size(); ++id) primitive = primitive && is_primitive(reads.encoded(id));
      if (!primitive) {
        out << "mode=ebwt skipped=non-primitive-read\n";
        continue;
      }
    }
    const std::size_t before = v.failures;
    const AnyIndex index = build(mode, reads, mode == "relaxed" ? contexts : empty_contexts(reads));
    v.check_index(mode, index, contexts, patterns);
    if (serialize_index(deserialize_index(serialize_index(index))) != serialize_index(index))
      v.fail(mode, "index file round trip is not byte-identical");
    out << "mode=" << mode << " patterns=" << patterns.size() << " mismatches=" << v.failures - before << '\n';
  }
  if (!f.index.empty()) {
    const AnyIndex loaded = load_index(f.index);
    const std::string mode(to_string(kind_of(loaded)));
    const std::size_t before = v.failures;
    v.check_index(mode, loaded, std::holds_alternative<PathIndex>(loaded) ? std::get<PathIndex>(loaded).contexts : contexts,
                  patterns);
    out << "index=" << f.index << " kind=" << mode << " mismatches=" << v.failures - before << '\n';
  }
  out << (v.failures == 0 ? "PASS" : "FAIL") << '\n';
  return v.failures == 0 ? ok : verify_failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Run-length compressed indexes over read collections"};
  app.require_subcommand(1);

  BuildFlags bf;
  auto* build_cmd = app.add_subcommand("build", "build an index file from reads");
  build_cmd->add_option("input", bf.input, "reads: plain text or FASTA")->required();
  add_build_options(*build_cmd, bf, false);
  build_cmd->add_option("--out,-o", bf.out, "index file to write")->required();

  QueryFlags qf;
  auto* query_cmd = app.add_subcommand("query", "search a pattern");
  query_cmd->add_option("index", qf.index, "index file")->required();
  query_cmd->add_option("--pattern,-p", qf.pattern, "pattern")->required();
  query_cmd->add_flag("--count", qf.count, "print total and true match counts");
  query_cmd->add_flag("--locate", qf.locate, "print read_id, offset, classification per match");
  query_cmd->add_flag("--witness", qf.witness, "print one true match or none");
  query_cmd->add_flag("--include-false", qf.include_false, "also list false matches with --locate");

  std::string stats_index;
  auto* stats_cmd = app.add_subcommand("stats", "print index statistics as key=value lines");
  stats_cmd->add_option("index", stats_index, "index file")->required();

  VerifyFlags vf;
  vf.build.mode = "all";
  auto* verify_cmd = app.add_subcommand("verify", "cross-check indexes against brute force");
  verify_cmd->add_option("input", vf.build.input, "reads: plain text or FASTA")->required();
  add_build_options(*verify_cmd, vf.build, true);
  verify_cmd->add_option("--patterns", vf.patterns, "file with one pattern per line");
  verify_cmd->add_option("--random", vf.random, "COUNT,LEN random patterns of length 1..LEN");
  verify_cmd->add_option("--seed", vf.seed, "seed for --random");
  verify_cmd->add_option("--index", vf.index, "also load and check this index file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*build_cmd) return cmd_build(bf, *build_cmd, out);
    if (*query_cmd) return cmd_query(qf, out);
    if (*stats_cmd) {
      print_stats(load_index(stats_index), out);
      return ok;
    }
    return cmd_verify(vf, *verify_cmd, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return data_error;
  }
}

}  // namespace rwg::cli

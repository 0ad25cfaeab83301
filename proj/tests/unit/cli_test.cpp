#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "example.hpp"
#include "rwg/index_file.hpp"
#include "rwg/read_input.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rwg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Workspace {
  fs::path dir = fs::temp_directory_path() / "rwg_cli_test";
  Workspace() {
    fs::remove_all(dir);
    fs::create_directories(dir);
    write("reads.txt", "GATTA\nTTAGA\nTAGATA\nGATAC\nATACAT\n");
    write("genome.fa", ">chr\nGATTAGATACAT\n");
  }
  ~Workspace() { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
};

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("build and stats for every mode") {
  Workspace ws;
  const auto reads = ws.path("reads.txt");
  CHECK(run({"build", reads, "--mode", "ebwt", "-o", ws.path("e.idx")}).code == 0);
  CHECK(run({"build", reads, "--mode", "bcr", "-o", ws.path("b.idx")}).code == 0);
  CHECK(run({"build", reads, "--mode", "paths", "-o", ws.path("p.idx")}).code == 0);
  const Result r = run({"build", reads, "--mode", "relaxed", "--context", "genome", "--genome", ws.path("genome.fa"), "-o",
                        ws.path("r.idx")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "rho=7"));

  CHECK(has_line(run({"stats", ws.path("e.idx")}).out, "rho=10"));
  CHECK(has_line(run({"stats", ws.path("b.idx")}).out, "rho=19"));
  const Result paths = run({"stats", ws.path("p.idx")});
  CHECK(has_line(paths.out, "rho=11"));
  CHECK(has_line(paths.out, "kind=paths"));
  CHECK(has_line(paths.out, "N=32"));
  CHECK(has_line(paths.out, "r=5"));
  const Result relaxed = run({"stats", ws.path("r.idx")});
  CHECK(has_line(relaxed.out, "contexts=genome"));
  CHECK(has_line(relaxed.out, "n=27"));

  ws.write("one.txt", "GATTACA\n");
  CHECK(run({"build", ws.path("one.txt"), "--mode", "paths", "-o", ws.path("one.idx")}).code == 0);
  CHECK(has_line(run({"stats", ws.path("one.idx")}).out, "r=1"));
}

TEST_CASE("query modes") {
  Workspace ws;
  REQUIRE(run({"build", ws.path("reads.txt"), "--context", "genome", "--genome", ws.path("genome.fa"), "-o", ws.path("r.idx")})
              .code == 0);
  REQUIRE(run({"build", ws.path("reads.txt"), "--mode", "ebwt", "-o", ws.path("e.idx")}).code == 0);

  const Result c = run({"query", ws.path("r.idx"), "--pattern", "GAT", "--count"});
  CHECK(c.code == 0);
  CHECK(c.out == "total=6\ntrue=3\n");

  const Result l = run({"query", ws.path("r.idx"), "-p", "GAT", "--locate"});
  CHECK(l.out == "0\t3\ttrue\n3\t3\ttrue\n2\t5\ttrue\n");
  const Result all = run({"query", ws.path("r.idx"), "-p", "GAT", "--locate", "--include-false"});
  CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 6);
  CHECK(all.out.find("\tfalse") != std::string::npos);

  const Result w = run({"query", ws.path("r.idx"), "-p", "GAT", "--witness"});
  CHECK(w.code == 0);
  CHECK((w.out == "0\t3\n" || w.out == "3\t3\n" || w.out == "2\t5\n"));
  CHECK(run({"query", ws.path("r.idx"), "-p", "AGATAC", "--witness"}).out == "none\n");

  const Result e = run({"query", ws.path("e.idx"), "-p", "AGATT", "--count"});
  CHECK(e.out.find("total=0") == std::string::npos);
  CHECK(has_line(e.out, "true=0"));
}

TEST_CASE("exit codes") {
  Workspace ws;
  ws.write("empty.txt", "");
  ws.write("bad.txt", "GATTA\nGANTA\n");
  ws.write("power.txt", "ACAC\n");
  const auto reads = ws.path("reads.txt");
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"build", reads}).code == 1);
  CHECK(run({"build", reads, "--mode", "nope", "-o", ws.path("x.idx")}).code == 1);
  CHECK(run({"build", reads, "--mode", "bcr", "--context", "genome", "--genome", ws.path("genome.fa"), "-o", ws.path("x.idx")}).code == 1);
  CHECK(run({"build", reads, "--context", "genome", "-o", ws.path("x.idx")}).code == 1);
  CHECK(run({"build", reads, "--genome", ws.path("genome.fa"), "-o", ws.path("x.idx")}).code == 1);
  CHECK(run({"build", ws.path("empty.txt"), "-o", ws.path("x.idx")}).code == 2);
  CHECK(run({"build", ws.path("bad.txt"), "-o", ws.path("x.idx")}).code == 2);
  CHECK(run({"build", ws.path("missing.txt"), "-o", ws.path("x.idx")}).code == 2);
  CHECK(run({"build", ws.path("power.txt"), "--mode", "ebwt", "-o", ws.path("x.idx")}).code == 2);

  REQUIRE(run({"build", reads, "--mode", "bcr", "-o", ws.path("b.idx")}).code == 0);
  CHECK(run({"query", ws.path("b.idx"), "-p", "GAT"}).code == 1);
  CHECK(run({"query", ws.path("b.idx"), "-p", "GAT", "--count", "--locate"}).code == 1);
  CHECK(run({"query", ws.path("b.idx"), "-p", "GNT", "--count"}).code == 1);
  CHECK(run({"query", ws.path("b.idx"), "-p", "GAT", "--witness"}).code == 1);
  CHECK(run({"query", ws.path("missing.idx"), "-p", "GAT", "--count"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("explicit and overlap contexts") {
  Workspace ws;
  ws.write("ctx.txt", "\nGA\nGAT\nGATTA\nGATTAG\n");
  const Result f = run({"build", ws.path("reads.txt"), "--context", "file", "--context-file", ws.path("ctx.txt"), "-o",
                        ws.path("f.idx")});
  CHECK(f.code == 0);
  CHECK(has_line(f.out, "rho=7"));
  CHECK(has_line(f.out, "contexts=explicit"));
  ws.write("short.txt", "GA\n");
  CHECK(run({"build", ws.path("reads.txt"), "--context", "file", "--context-file", ws.path("short.txt"), "-o", ws.path("g.idx")})
            .code == 2);
  const Result o = run({"build", ws.path("reads.txt"), "--context", "overlap", "--min-overlap", "2", "-o", ws.path("o.idx")});
  CHECK(o.code == 0);
  CHECK(has_line(o.out, "contexts=overlap"));
}

TEST_CASE("build output is byte-identical across runs") {
  Workspace ws;
  for (const char* mode : {"ebwt", "bcr", "paths", "relaxed"}) {
    REQUIRE(run({"build", ws.path("reads.txt"), "--mode", mode, "-o", ws.path("a.idx")}).code == 0);
    REQUIRE(run({"build", ws.path("reads.txt"), "--mode", mode, "-o", ws.path("b.idx")}).code == 0);
    CHECK(rwg::read_file(ws.path("a.idx")) == rwg::read_file(ws.path("b.idx")));
  }
}

TEST_CASE("verify") {
  Workspace ws;
  ws.write("patterns.txt", "GAT\nATA\nAGATT\nAGATAC\nTTAGATAC\n");
  Result v = run({"verify", ws.path("reads.txt"), "--patterns", ws.path("patterns.txt"), "--context", "genome", "--genome",
                  ws.path("genome.fa")});
  CHECK(v.code == 0);
  CHECK(has_line(v.out, "PASS"));
  CHECK(has_line(v.out, "mode=relaxed patterns=5 mismatches=0"));

  v = run({"verify", ws.path("reads.txt"), "--random", "100,6", "--seed", "5", "--context", "overlap"});
  CHECK(v.code == 0);

  ws.write("power.txt", "ACAC\nGT\n");
  v = run({"verify", ws.path("power.txt"), "--random", "20,4"});
  CHECK(v.code == 0);
  CHECK(has_line(v.out, "mode=ebwt skipped=non-primitive-read"));

  REQUIRE(run({"build", ws.path("reads.txt"), "--mode", "paths", "-o", ws.path("p.idx")}).code == 0);
  v = run({"verify", ws.path("reads.txt"), "--mode", "paths", "--random", "30,5", "--index", ws.path("p.idx")});
  CHECK(v.code == 0);
  std::string bytes = rwg::read_file(ws.path("p.idx"));
  bytes[bytes.size() / 2] ^= 1;
  std::ofstream(ws.path("p.idx"), std::ios::binary) << bytes;
  v = run({"verify", ws.path("reads.txt"), "--mode", "paths", "--index", ws.path("p.idx")});
  CHECK(v.code == 2);
  CHECK(v.err.find("corrupted") != std::string::npos);

  // an index of other reads does not verify against these reads
  ws.write("other.txt", "GATTACA\n");
  REQUIRE(run({"build", ws.path("other.txt"), "--mode", "paths", "-o", ws.path("o.idx")}).code == 0);
  v = run({"verify", ws.path("reads.txt"), "--mode", "paths", "--random", "10,3", "--index", ws.path("o.idx")});
  CHECK(v.code == 3);
  CHECK(has_line(v.out, "FAIL"));
}

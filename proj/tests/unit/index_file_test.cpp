#include <doctest.h>

#include <filesystem>
#include <random>

#include "example.hpp"
#include "rwg/error.hpp"
#include "rwg/index_file.hpp"
#include "rwg/relaxed.hpp"
#include "rwg/wheeler.hpp"

using namespace rwg;

namespace {

std::vector<AnyIndex> example_indexes() {
  const ReadCollection reads = testing::example_reads();
  return {build_ebwt(reads), build_bcr(reads), build_wheeler_paths(reads),
          build_relaxed(reads, contexts_from_genome(reads, testing::kExampleGenome))};
}

std::string reseal(std::string bytes) {
  bytes.resize(bytes.size() - 8);
  std::uint64_t h = fnv1a64(bytes);
  for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<char>((h >> (8 * i)) & 0xff));
  return bytes;
}

}  // namespace

TEST_CASE("round trip preserves every query answer") {
  for (const AnyIndex& idx : example_indexes()) {
    const std::string bytes = serialize_index(idx);
    const AnyIndex back = deserialize_index(bytes);
    CHECK(kind_of(back) == kind_of(idx));
    CHECK(serialize_index(back) == bytes);
    for (std::string p : {"GAT", "ATA", "A", "TT", "AGATT", "CAT", "GATTACA"}) {
      CHECK(count(back, p) == count(idx, p));
      CHECK(locate_all(back, p) == locate_all(idx, p));
      if (const auto* path = std::get_if<PathIndex>(&idx)) CHECK(certify(std::get<PathIndex>(back), p) == certify(*path, p));
    }
  }
}

TEST_CASE("builds are deterministic") {
  const auto a = example_indexes();
  const auto b = example_indexes();
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(serialize_index(a[i]) == serialize_index(b[i]));
}

TEST_CASE("header layout") {
  const std::string bytes = serialize_index(example_indexes()[3]);
  CHECK(bytes.substr(0, 8) == "RWGIDX01");
  CHECK(static_cast<unsigned char>(bytes[8]) == kIndexFormatVersion);
  CHECK(static_cast<unsigned char>(bytes[12]) == static_cast<unsigned char>(IndexKind::relaxed));
}

TEST_CASE("corruption is a data error") {
  const std::string good = serialize_index(example_indexes()[3]);
  std::string flipped = good;
  flipped[good.size() / 2] ^= 0x20;
  CHECK_THROWS_AS(deserialize_index(flipped), DataError);
  CHECK_THROWS_AS(deserialize_index(good.substr(0, good.size() - 3)), DataError);
  CHECK_THROWS_AS(deserialize_index("hello"), DataError);
  std::string magic = good;
  magic[0] = 'X';
  CHECK_THROWS_AS(deserialize_index(magic), DataError);

  std::string version = good;
  version[8] = 7;
  try {
    deserialize_index(reseal(version));
    FAIL("expected a version error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("version") != std::string::npos);
  }
  std::string kind = good;
  kind[12] = 9;
  CHECK_THROWS_AS(deserialize_index(reseal(kind)), DataError);

  // a self-consistent checksum over garbage still fails section parsing
  std::string garbage = good;
  for (std::size_t i = 13; i + 8 < garbage.size(); i += 7) garbage[i] = static_cast<char>(0xff);
  CHECK_THROWS_AS(deserialize_index(reseal(garbage)), DataError);
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "rwg_index_file_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "relaxed.idx";
  const AnyIndex idx = example_indexes()[3];
  save_index(idx, path);
  CHECK(serialize_index(load_index(path)) == serialize_index(idx));
  CHECK_THROWS_AS(load_index(dir / "missing.idx"), DataError);
  std::filesystem::remove_all(dir);
}

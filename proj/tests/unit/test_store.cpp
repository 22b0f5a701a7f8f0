#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "modlat/canon.hpp"
#include "modlat/census.hpp"
#include "modlat/families.hpp"
#include "modlat/generator.hpp"
#include "modlat/store.hpp"

using namespace modlat;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("modlat-store-test-" + std::to_string(rd()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::vector<std::vector<CanonicalForm>>& racks12() {
  static const auto racks = generate_up_to(Family::kModularViRack, 12);
  return racks;
}

}  // namespace

TEST_CASE("write, open and read back every record") {
  TempDir dir;
  const RackStore written = RackStore::write(dir.path, "rack", racks12());
  const RackStore store = RackStore::open(dir.path);
  CHECK(store.max_complete_size() == 12);
  for (int k = 1; k <= 12; ++k) {
    REQUIRE(store.count(k) == racks12()[k].size());
    CHECK(store.read_all(k) == racks12()[k]);
    for (std::size_t i = 0; i < store.count(k); ++i) {
      CHECK(store.record(k, i) == racks12()[k][i]);
      CHECK(store.get(k, i) == lattice_of(racks12()[k][i]));
      const RecordMeta expected = compute_meta(store.get(k, i));
      CHECK(store.meta(k, i).sites == expected.sites);
      CHECK(store.meta(k, i).cycle_index == expected.cycle_index);
    }
  }
  CHECK(is_isomorphic(store.get(4, 0), boolean_lattice(2)));
}

TEST_CASE("writes are byte-identical") {
  TempDir a, b;
  RackStore::write(a.path, "rack", racks12());
  RackStore::write(b.path, "rack", generate_up_to(Family::kModularViRack, 12));
  for (int k = 1; k <= 12; ++k) {
    for (const char* ext : {".d6", ".idx", ".meta"}) {
      const std::string name = "rack-" + std::to_string(k) + ext;
      CHECK(slurp(a.path / name) == slurp(b.path / name));
    }
  }
  CHECK(slurp(a.path / "rack-8.meta") == "0\t3\tt1^3\n1\t3\tt1^3\n2\t0\t1\n");
}

TEST_CASE("index layout") {
  TempDir dir;
  RackStore::write(dir.path, "rack", racks12());
  const std::string idx = slurp(dir.path / "rack-10.idx");
  const std::string d6 = slurp(dir.path / "rack-10.d6");
  CHECK(idx.size() == 8 * racks12()[10].size());
  std::uint64_t second = 0;
  for (int b = 7; b >= 0; --b) second = (second << 8) | static_cast<unsigned char>(idx[8 + b]);
  CHECK(second == racks12()[10][0].bytes.size() + 1);
  CHECK(d6.substr(second, racks12()[10][1].bytes.size()) == racks12()[10][1].bytes);
}

TEST_CASE("corrupt stores are rejected") {
  TempDir dir;
  RackStore::write(dir.path, "rack", racks12());
  SUBCASE("offset mismatch") {
    std::fstream f(dir.path / "rack-10.idx", std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(8);
    f.put('\x01');
    f.close();
    try {
      RackStore::open(dir.path);
      FAIL("expected StoreError");
    } catch (const StoreError& e) {
      CHECK(e.kind() == StoreError::Kind::kCorruptIndex);
    }
  }
  SUBCASE("truncated index") {
    fs::resize_file(dir.path / "rack-12.idx", 12);
    CHECK_THROWS_AS(RackStore::open(dir.path), StoreError);
  }
  SUBCASE("metadata row missing") {
    std::ofstream(dir.path / "rack-8.meta", std::ios::trunc) << "0\t3\tt1^3\n";
    try {
      RackStore::open(dir.path);
      FAIL("expected StoreError");
    } catch (const StoreError& e) {
      CHECK(e.kind() == StoreError::Kind::kCorruptMeta);
    }
  }
}

TEST_CASE("unknown sizes and records") {
  TempDir dir;
  const RackStore store = RackStore::write(dir.path, "rack", racks12());
  try {
    store.get(13, 0);
    FAIL("expected StoreError");
  } catch (const StoreError& e) {
    CHECK(e.kind() == StoreError::Kind::kUnknownSize);
  }
  CHECK_THROWS_AS(store.get(12, 24), StoreError);
  CHECK_THROWS_AS(RackStore::open(dir.path / "missing"), StoreError);
}

TEST_CASE("census counts") {
  const RackStore store = RackStore::in_memory("rack", generate_up_to(Family::kModularViRack, 16));
  Census census(store);
  CHECK(census.mv_count(1) == 1);
  CHECK(census.mv_count(10) == 28);
  CHECK(census.mv_count(16) == 3134);
  CHECK(census.m_count(2) == 1);
  CHECK(census.m_count(8) == 34);
  CHECK(census.m_count(16) == 20475);
  CHECK(cycle_index_census(store, 12).size() == 7);
  CHECK(cycle_index_census(store, 8).size() == 2);
  CHECK(cycle_index_census(store, 3).empty());
  for (int n = 1; n <= 16; ++n) {
    const CensusRow row = census.row(n);
    const auto& expected = fixture::census(n);
    CHECK(row.cycle_indices == static_cast<std::size_t>(expected.cycle_indices));
    CHECK(row.racks == static_cast<std::size_t>(expected.racks));
    CHECK(row.vi_lattices == expected.vi_lattices);
    CHECK(row.lattices == expected.lattices);
    std::size_t total = 0;
    for (const auto& [z, count] : cycle_index_census(store, n)) total += count;
    CHECK(total == row.racks);
  }
  CHECK(format_row(census.row(12)) == "12\t7\t24\t127\t766");
}

TEST_CASE("census agrees with explicit generation") {
  const RackStore store = RackStore::in_memory("rack", generate_up_to(Family::kModularViRack, 14));
  Census census(store);
  const auto vi = generate_up_to(Family::kModularVi, 14);
  for (int n = 1; n <= 14; ++n) CHECK(census.mv_count(n) == BigInt(vi[n].size()));
  const auto all = generate_up_to(Family::kModular, 10);
  for (int n = 1; n <= 10; ++n) CHECK(census.m_count(n) == BigInt(all[n].size()));
}

TEST_CASE("census needs every smaller size") {
  TempDir dir;
  RackStore::write(dir.path, "rack", racks12());
  for (const char* ext : {".d6", ".idx", ".meta"}) fs::remove(dir.path / ("rack-5" + std::string(ext)));
  const RackStore store = RackStore::open(dir.path);
  CHECK(store.max_complete_size() == 4);
  Census census(store);
  CHECK(census.mv_count(4) == 1);
  CHECK_THROWS_AS(census.mv_count(6), StoreError);
}

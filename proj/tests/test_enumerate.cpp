#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "fillsys/enumerate.hpp"
#include "oracles.hpp"

using namespace fillsys;

namespace {

// orbit keys of k-filling systems found by brute force over all involutions
std::set<oracle::Pairs> brute_orbits(int g, int k, bool connected_only) {
  const int n = 2 * g + k;
  std::set<oracle::Pairs> out;
  for (auto& p : oracle::all_involutions(n)) {
    if (oracle::has_adjacent(p, n)) continue;
    auto m = oracle::to_matching(p, n);
    if (!oracle::filling(m, g, k)) continue;
    if (connected_only && oracle::components(p) != 1) continue;
    out.insert(oracle::orbit_key(m));
  }
  return out;
}

std::set<oracle::Pairs> keys(const OrbitCatalog& c) {
  std::set<oracle::Pairs> out;
  for (auto& d : c.reps) out.insert(oracle::orbit_key(d.matching()));
  return out;
}

}  // namespace

TEST_CASE("matching enumeration against brute force") {
  CHECK(enumerate_matchings(1).empty());
  auto two = enumerate_matchings(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == ChordDiagram({2, 3, 0, 1}));
  for (int n = 2; n <= 6; ++n) {
    size_t brute = 0;
    for (auto& p : oracle::all_involutions(n)) brute += !oracle::has_adjacent(p, n);
    std::set<std::vector<int>> seen;
    for_each_matching(n, [&](const std::vector<int>& m) { seen.insert(m); });
    CHECK(seen.size() == brute);
  }
  // 0, 1, 4, 31, 293, 3326: cyclic matchings with no adjacent pair
  CHECK(enumerate_matchings(3).size() == 4);
  CHECK(enumerate_matchings(4).size() == 31);
  CHECK(enumerate_matchings(5).size() == 293);
  CHECK_THROWS_AS(enumerate_matchings(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_matchings(10), std::out_of_range);
}

TEST_CASE("orbit catalogs") {
  auto g1 = orbit_catalog(1, 0, false);
  REQUIRE(g1.reps.size() == 1);
  CHECK(g1.reps[0] == ChordDiagram({2, 3, 0, 1}));
  CHECK(orbit_catalog(1, 1, false).reps.size() == 1);
  CHECK(orbit_catalog(1, 2, false).reps.empty());

  auto g2 = orbit_catalog(2, 0, false);
  CHECK(g2.total == 4);
  CHECK(g2.connected == 3);
  CHECK(orbit_catalog(2, 0, true).reps.size() == 3);
  CHECK(orbit_catalog(2, 1, true).reps.size() == 18);
}

TEST_CASE("orbit catalogs match the brute-force oracle") {
  for (auto [g, k] : {std::pair{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}})
    for (bool conn : {false, true}) {
      auto c = orbit_catalog(g, k, conn);
      CHECK(keys(c) == brute_orbits(g, k, conn));
      CHECK(std::is_sorted(c.reps.begin(), c.reps.end()));
      for (auto& d : c.reps) CHECK(d == canonical_form(d));
    }
}

TEST_CASE("threads do not change the catalog") {
  auto a = orbit_catalog(2, 2, false, 1);
  auto b = orbit_catalog(2, 2, false, 4);
  CHECK(a.reps == b.reps);
  CHECK(a.total == b.total);
  CHECK(a.connected == b.connected);
}

TEST_CASE("catalog cache round trip") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / ("fillsys-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  auto fresh = cached_orbit_catalog(dir.string(), 2, 1, true);
  REQUIRE(fs::exists(dir / "catalog_g2_k1_conn.json"));
  auto again = cached_orbit_catalog(dir.string(), 2, 1, true);
  CHECK(again.reps == fresh.reps);
  CHECK(again.total == fresh.total);
  // a corrupt file is rebuilt
  std::ofstream(dir / "catalog_g2_k1_conn.json") << "{not json";
  CHECK(cached_orbit_catalog(dir.string(), 2, 1, true).reps == fresh.reps);
  fs::remove_all(dir);
}

TEST_CASE("arity bound") {
  auto r1 = max_arity_check(1);
  CHECK(r1.ok);
  CHECK(r1.max_chords == 3);
  CHECK(r1.exhaustive);
  auto r2 = max_arity_check(2);
  CHECK(r2.ok);
  CHECK(r2.max_chords == 9);
  CHECK(r2.bound_holds);
  auto w = find_filling(2, 5);
  REQUIRE(w);
  CHECK(w->n() == 9);
  CHECK(oracle::filling(w->matching(), 2, 5));
  CHECK_FALSE(find_filling(1, 2));
}

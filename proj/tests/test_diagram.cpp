#include <doctest.h>

#include "fillsys/diagram.hpp"
#include "oracles.hpp"

using namespace fillsys;

namespace {

ChordDiagram D(int n, std::vector<Chord> c) { return ChordDiagram::from_chords(n, c); }

}  // namespace

TEST_CASE("construction rejects invalid matchings") {
  CHECK_THROWS_AS(ChordDiagram({1, 0, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ChordDiagram({2, 3, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ChordDiagram({0, 3, 2, 1}), std::invalid_argument);
  CHECK(validation_error({1, 0, 3, 2}) == "adjacent pairing at point 0");
  CHECK(validation_error({2, 3, 0, 1}).empty());
  // 0 and 2n-1 are adjacent on the circle
  CHECK_FALSE(validation_error({3, 2, 1, 0}).empty());
}

TEST_CASE("cycles of f(i) = m[i]+1") {
  auto phi = D(2, {{0, 2}, {1, 3}});
  auto c = cycles(phi);
  REQUIRE(c.b() == 1);
  CHECK(c.cycles[0] == std::vector<int>{0, 3, 2, 1});

  auto two_cycles = D(3, {{0, 2}, {1, 4}, {3, 5}});
  auto pc = cycles(two_cycles);
  REQUIRE(pc.b() == 2);
  CHECK(pc.cycles[0] == std::vector<int>{0, 3});
  CHECK(pc.cycles[1] == std::vector<int>{1, 5, 4, 2});

  CHECK(cycles(D(3, {{0, 3}, {1, 4}, {2, 5}})).b() == 2);
}

TEST_CASE("genus against the Euler characteristic oracle") {
  CHECK(genus(D(2, {{0, 2}, {1, 3}})) == 1);
  CHECK(genus(D(3, {{0, 2}, {1, 4}, {3, 5}})) == 1);
  CHECK(genus(D(4, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})) == 2);
  for (int n = 2; n <= 5; ++n)
    for (auto& p : oracle::all_involutions(n)) {
      if (oracle::has_adjacent(p, n)) continue;
      auto m = oracle::to_matching(p, n);
      ChordDiagram d(m);
      REQUIRE(genus(d) == oracle::genus(m));
      std::vector<int> lens;
      for (auto& cyc : cycles(d).cycles) lens.push_back(static_cast<int>(cyc.size()));
      std::sort(lens.begin(), lens.end());
      REQUIRE(lens == oracle::cycle_lengths(m));
    }
}

TEST_CASE("k-filling") {
  CHECK(is_k_filling(D(2, {{0, 2}, {1, 3}}), 1, 0));
  CHECK_FALSE(is_k_filling(D(2, {{0, 2}, {1, 3}}), 1, 1));
  // the unique genus-1 1-filling system is the three diameters; the
  // {(0,2),(1,4),(3,5)} diagram has a parallel pair
  CHECK(is_k_filling(D(3, {{0, 3}, {1, 4}, {2, 5}}), 1, 1));
  CHECK_FALSE(is_k_filling(D(3, {{0, 2}, {1, 4}, {3, 5}}), 1, 1));
  for (int n = 2; n <= 5; ++n)
    for (auto& p : oracle::all_involutions(n)) {
      if (oracle::has_adjacent(p, n)) continue;
      auto m = oracle::to_matching(p, n);
      for (int g = 1; g <= 2; ++g)
        for (int k = 0; k <= 3; ++k) REQUIRE(is_k_filling(ChordDiagram(m), g, k) == oracle::filling(m, g, k));
    }
}

TEST_CASE("crossing and components") {
  auto d = D(2, {{0, 2}, {1, 3}});
  CHECK(crosses(d, {0, 2}, {1, 3}));
  CHECK_FALSE(crosses(D(4, {{0, 2}, {1, 4}, {3, 6}, {5, 7}}), {0, 2}, {3, 6}));
  auto two = D(4, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  CHECK_FALSE(is_connected(two));
  CHECK(components(two).size() == 2);
  for (auto& p : oracle::all_involutions(4)) {
    if (oracle::has_adjacent(p, 4)) continue;
    ChordDiagram x(oracle::to_matching(p, 4));
    REQUIRE(static_cast<int>(components(x).size()) == oracle::components(p));
  }
}

TEST_CASE("parallel pairs are 2-cycles") {
  CHECK_FALSE(parallel_pair_exists(D(2, {{0, 2}, {1, 3}})));
  CHECK(parallel_pair_exists(D(3, {{0, 2}, {1, 4}, {3, 5}})));
  CHECK_FALSE(parallel_pair_exists(D(3, {{0, 3}, {1, 4}, {2, 5}})));
}

TEST_CASE("rotation and canonical form") {
  auto s4 = zigzag(4);
  for (int r = 0; r < 8; ++r) {
    auto x = rotate(s4, r);
    CHECK(canonical_form(x) == canonical_form(s4));
    CHECK(equivalent(x, s4));
    CHECK(rotate(x, -r) == s4);
  }
  for (auto& p : oracle::all_involutions(4)) {
    if (oracle::has_adjacent(p, 4)) continue;
    auto m = oracle::to_matching(p, 4);
    auto c = canonical_form(ChordDiagram(m));
    REQUIRE(oracle::orbit_key(c.matching()) == oracle::orbit_key(m));
    REQUIRE(c == rotate(ChordDiagram(m), canonical_rotation(ChordDiagram(m))));
  }
}

TEST_CASE("rotation symmetry") {
  auto a = symmetry(D(2, {{0, 2}, {1, 3}}));
  CHECK(a.order == 4);
  CHECK(a.perm_sign == -1);
  auto b = symmetry(D(4, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}));
  CHECK(b.order == 8);
  CHECK(b.perm_sign == -1);
  auto c = symmetry(zigzag(4));
  CHECK(c.order == 1);
  CHECK(c.perm_sign == 1);
  // rotating the four diameters by one point sends chord i to chord i+1 mod 4
  CHECK(rotation_perm_sign(D(4, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}), 1) == -1);
}

TEST_CASE("zigzag") {
  CHECK(zigzag(2) == D(2, {{0, 2}, {1, 3}}));
  CHECK(zigzag(4) == ChordDiagram({2, 4, 0, 6, 1, 7, 3, 5}));
  for (int m = 2; m <= 8; m += 2) {
    auto z = zigzag(m);
    CHECK(is_connected(z));
    CHECK(cycles(z).b() == 1);
    CHECK(genus(z) == m / 2);
  }
}

TEST_CASE("salient diagrams") {
  CHECK(is_salient(D(2, {{0, 2}, {1, 3}})));
  CHECK_FALSE(is_salient(D(4, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})));
  CHECK(is_salient(D(4, {{0, 2}, {1, 3}, {4, 6}, {5, 7}})));
  CHECK(is_salient(rotate(zigzag(4), 3)));
  CHECK_FALSE(is_salient(ChordDiagram({2, 5, 0, 6, 7, 1, 3, 4})));
}

TEST_CASE("delete and induce") {
  auto s4 = zigzag(4);
  auto f = delete_chord(s4, 0);
  CHECK(f.n() == 3);
  CHECK(delete_chord(D(3, {{0, 3}, {1, 4}, {2, 5}}), 1) == D(2, {{0, 2}, {1, 3}}));
  // deleting a chord that leaves an adjacent pair gives the empty diagram
  CHECK(delete_chord(zigzag(2), 0).points() == 0);
  CHECK(induced(D(4, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}), {2, 3}) == D(2, {{0, 2}, {1, 3}}));
}

TEST_CASE("text format round trip and errors") {
  auto s4 = zigzag(4);
  CHECK(to_text(s4) == "n=4;chords=(0,2)(1,4)(3,6)(5,7)");
  CHECK(parse_diagram(to_text(s4)) == s4);
  auto rec = parse_record("n=2;chords=(0,2)(1,3);mark=1;sign=-1");
  CHECK(rec.mark == 1);
  CHECK(rec.sign == -1);
  CHECK(parse_record("n=2;\nchords=(0,2)\n(1,3)").diagram == zigzag(2));

  auto err = [](const char* s) {
    try {
      parse_record(s);
    } catch (const ParseError& e) {
      return std::make_tuple(e.line, e.column, std::string(e.what()));
    }
    return std::make_tuple(0, 0, std::string());
  };
  CHECK(err("n=2;chords=(0,1)(2,3)") == std::make_tuple(1, 13, std::string("adjacent pairing at point 0")));
  CHECK(std::get<2>(err("n=2;chords=(0,2)(1,9)")).find("out of range") != std::string::npos);
  CHECK(std::get<2>(err("n=2;chords=(0,2)(2,3)")).find("paired twice") != std::string::npos);
  CHECK(std::get<2>(err("n=3;chords=(0,2)(1,3)")).find("chord") != std::string::npos);
  CHECK(std::get<0>(err("n=2;\nchords=(0,2)\n(1,x)")) == 3);
  CHECK(std::get<2>(err("n=2;colour=3")).find("unknown key") != std::string::npos);
  CHECK(std::get<2>(err("n=2;chords=(0,2)(1,3);sign=2")).find("sign") != std::string::npos);
}

TEST_CASE("json and dot export") {
  for (auto& d : {zigzag(2), zigzag(4), D(4, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})}) {
    CHECK(diagram_from_json(to_json(d)) == d);
  }
  auto dot = to_dot(zigzag(2));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}

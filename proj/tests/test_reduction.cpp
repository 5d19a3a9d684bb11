#include <doctest.h>

#include <random>

#include "fillsys/reduction.hpp"
#include "fillsys/verify.hpp"
#include "oracles.hpp"

using namespace fillsys;

namespace {

// zigzag(2) labelled by the columns of M
LabelledDiagram torus(const IntMatrix& M) {
  auto word = [](long a, long b) {
    Word w;
    for (long i = 0; i < std::abs(a); ++i) w.push_back(a > 0 ? 1 : -1);
    for (long i = 0; i < std::abs(b); ++i) w.push_back(b > 0 ? 2 : -2);
    return w;
  };
  return LabelledDiagram::from_chord_labels(zigzag(2), {word(M[0][0], M[1][0]), word(M[0][1], M[1][1])});
}

IntMatrix random_gl2(std::mt19937& rng) {
  IntMatrix M{{1, 0}, {0, 1}};
  std::uniform_int_distribution<int> op(0, 4);
  for (int s = 0; s < 6; ++s) {
    switch (op(rng)) {
      case 0: M[0][1] += M[0][0], M[1][1] += M[1][0]; break;
      case 1: M[0][0] += M[0][1], M[1][0] += M[1][1]; break;
      case 2: M[0][1] -= M[0][0], M[1][1] -= M[1][0]; break;
      case 3: M[0][0] -= M[0][1], M[1][0] -= M[1][1]; break;
      default: std::swap(M[0][0], M[0][1]), std::swap(M[1][0], M[1][1]);
    }
  }
  return M;
}

using Symbol = std::map<oracle::Slope, long>;

void accumulate(Symbol& s, const Symbol& t, long c) {
  for (auto& [k, v] : t) s[k] += c * v;
}

Symbol prune(Symbol s) {
  for (auto it = s.begin(); it != s.end();) it = it->second ? std::next(it) : s.erase(it);
  return s;
}

Symbol symbol_of(const LabelledDiagram& L) {
  auto lab = L.chord_labels();
  auto u = exponent_sums(lab[0], 1), v = exponent_sums(lab[1], 1);
  return oracle::symbol(u[0], u[1], v[0], v[1]);
}

}  // namespace

TEST_CASE("tails") {
  auto z = zigzag(4);
  auto s = find_salient_tail(z, 2);
  CHECK(s.length() == 4);
  CHECK(find_salient_tail(z, 2, true).length() == 4);
  CHECK(find_salient_tail(zigzag(2), 1).length() == 2);
  auto diam = ChordDiagram::from_chords(4, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK(find_salient_tail(diam, 2).length() == 1);
  for (int p = 0; p < 8; ++p) CHECK(tail_at(diam, p).length() <= 1);
  CHECK_THROWS(find_salient_tail(ChordDiagram::from_chords(4, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}), 2));
  CHECK_THROWS(find_salient_tail(ChordDiagram::from_chords(3, {{0, 3}, {1, 4}, {2, 5}}), 1));
}

TEST_CASE("extending a tail") {
  const auto& G = mcg::group();
  auto P = phi_labelled(2);
  auto tail = find_salient_tail(P.d, 2);
  REQUIRE(tail.length() == 1);
  auto e = extend_tail(P, tail, 2, G);
  CHECK(e.Lc.d.n() == 5);
  CHECK(cycles(e.Lc.d).b() == 2);
  CHECK(is_k_filling(e.Lc.d, 2, 1));
  CHECK(validate_labels(e.Lc, G));
  CHECK(e.tail.length() == 2);
  CHECK(std::find(e.tail.chords.begin(), e.tail.chords.end(), e.chord) != e.tail.chords.end());
  auto back = delete_chord(e.Lc, e.chord);
  CHECK(back.d == P.d);
  CHECK(same_labels(back, P, G));
  // other tail chords leave a disconnected or degenerate face
  for (int c : e.tail.chords) {
    if (c == e.chord) continue;
    auto f = delete_chord(e.Lc.d, c);
    CHECK((f.points() == 0 || !is_connected(f)));
  }
}

TEST_CASE("reduction of genus-2 systems") {
  const auto& G = mcg::group();
  auto J = crossing_form(2);
  auto I = identity_labelled(2);
  auto r0 = reduce(I, 2, G);
  REQUIRE(r0.terms.terms().size() == 1);
  CHECK(r0.max_rounds == 0);
  CHECK(h1_matrix(r0.terms.terms()[0].first.L, 2) == IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});

  for (int i = 1; i <= 2; ++i) {
    CAPTURE(i);
    auto P = phi_labelled(i);
    ReduceOptions opt;
    opt.trace = true;
    auto r = reduce(P, 2, G, opt);
    CHECK_FALSE(r.terms.is_zero());
    CHECK_FALSE(r.steps.empty());
    CHECK(r.max_rounds >= 1);
    for (auto& [t, c] : r.terms.terms()) {
      CHECK(t.L.d == zigzag(4));
      CHECK(validate_labels(t.L, G));
      auto M = h1_matrix(t.L, 2);
      CHECK(std::abs(oracle::det(M)) == 1);
      CHECK(preserves_form(M, J));
    }
    opt.memo = false;
    opt.trace = false;
    auto nm = reduce(P, 2, G, opt);
    CHECK(nm.terms.terms().size() == r.terms.terms().size());
  }

  // disconnected faces of insertions into S_4 reduce to zero
  int disconnected = 0;
  for (int ga = 0; ga < 8; ++ga)
    for (int gb = ga + 1; gb < 8; ++gb)
      if (auto L = insert_chord(I, ga, gb, G))
        for (int c = 0; c < 5; ++c) {
          auto F = delete_chord(*L, c);
          if (!is_k_filling(F.d, 2, 0) || is_connected(F.d)) continue;
          ++disconnected;
          CHECK(reduce(F, 2, G).terms.is_zero());
        }
  CHECK(disconnected > 0);
}

TEST_CASE("reduction in genus 1") {
  SurfaceGroup T(1);
  auto L = torus({{1, 1}, {0, 1}});
  auto r = reduce(L, 1, T);
  REQUIRE(r.terms.terms().size() == 1);
  CHECK(h1_matrix(r.terms.terms()[0].first.L, 1) == IntMatrix{{1, 1}, {0, 1}});

  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto M = random_gl2(rng);
    CAPTURE(M);
    auto X = torus(M);
    REQUIRE(validate_labels(X, T));
    auto res = reduce(X, 1, T);
    Symbol rhs;
    for (auto& [t, c] : res.terms.terms()) accumulate(rhs, symbol_of(t.L), c * t.sign);
    Symbol lhs = symbol_of(X);
    CHECK(prune(rhs) == prune(lhs));
    CHECK(modular_symbol_oracle(X, res));
  }
}

TEST_CASE("determinants and the crossing form") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> e(-4, 4);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 20; ++t) {
      IntMatrix M(n, std::vector<long>(n));
      for (auto& row : M)
        for (auto& v : row) v = e(rng);
      REQUIRE(determinant(M) == oracle::det(M));
    }
  auto J = crossing_form(2);
  auto z = zigzag(4).chords();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto [a, b] = z[i];
      auto [c, d] = z[j];
      int want = a < c && c < b && b < d ? 1 : (c < a && a < d && d < b ? -1 : 0);
      CHECK(J[i][j] == want);
    }
  CHECK(preserves_form({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, J));
  CHECK_FALSE(preserves_form({{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, J));
}

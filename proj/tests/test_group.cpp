#include <doctest.h>

#include "fillsys/automorphism.hpp"
#include "fillsys/labelled.hpp"
#include "fillsys/reduction.hpp"
#include "fillsys/verify.hpp"
#include "oracles.hpp"

using namespace fillsys;

namespace {

Word W(const char* s, int g = 2) { return parse_word(s, g); }

// M^T J M computed by hand
IntMatrix congruence(const IntMatrix& M, const IntMatrix& J) {
  const size_t n = M.size();
  IntMatrix out(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) out[i][j] += M[a][i] * J[a][b] * M[b][j];
  return out;
}

}  // namespace

TEST_CASE("word parsing and formatting") {
  CHECK(W("x z w^-1") == Word{1, 3, -4});
  CHECK(W("x1^2 x2", 1) == Word{1, 1, 2});
  CHECK(W("1").empty());
  CHECK(format_word(Word{1, 3, -4}, 2) == "x z w^-1");
  CHECK(format_word({}, 2) == "1");
  CHECK_THROWS(parse_word("x5", 2));
  CHECK_THROWS(parse_word("q", 2));
  CHECK(free_reduce(Word{1, 2, -2, -1, 3}) == Word{3});
  CHECK(inverse(Word{1, -2}) == Word{2, -1});
  CHECK(exponent_sums(Word{1, 1, -3}, 2) == std::vector<long>{2, 0, -1, 0});
}

TEST_CASE("surface group relators") {
  SurfaceGroup G2(2);
  CHECK(G2.relator() == W("x z w^-1 z^-1 y^-1 x^-1 y w"));
  for (int g = 1; g <= 4; ++g) {
    SurfaceGroup G(g);
    CHECK(G.relator().size() == static_cast<size_t>(4 * g));
    // each generator appears once with each sign
    for (long e : exponent_sums(G.relator(), g)) CHECK(e == 0);
    CHECK(G.is_trivial(G.relator()));
    if (g >= 2) CHECK(G.conjugate_of_relator(G.relator()));
  }
  CHECK_THROWS(SurfaceGroup(1).conjugate_of_relator({}));
  CHECK_THROWS_AS(SurfaceGroup(0), std::invalid_argument);
}

TEST_CASE("Dehn's algorithm") {
  SurfaceGroup G(2);
  auto r = G.relator();
  Word u = W("x y^-1 w");
  Word c = concat(concat(u, r), inverse(u));
  CHECK(G.is_trivial(c));
  CHECK(G.conjugate_of_relator(c));
  CHECK(G.conjugate_of_relator(inverse(c)));
  CHECK_FALSE(G.is_trivial(W("x y x^-1 y^-1")));
  CHECK_FALSE(G.conjugate_of_relator(W("x y x^-1 y^-1")));
  CHECK_FALSE(G.is_trivial(W("x")));
  // a relator split in half: the long half becomes the inverse of the short one
  Word half(r.begin(), r.begin() + 5);
  Word rest(r.begin() + 5, r.end());
  CHECK(G.equal(half, inverse(rest)));
  CHECK(G.reduce(half).size() == 3);

  SurfaceGroup T(1);
  CHECK(T.equal(W("x1 x2", 1), W("x2 x1", 1)));
  CHECK_FALSE(T.is_trivial(W("x1", 1)));
}

TEST_CASE("genus-2 mapping classes") {
  using namespace mcg;
  const auto& G = group();
  auto J = crossing_form(2);
  CHECK(format(parse("S0^-1 T0 S0 T2 R^-2")) == "S0^-1 T0 S0 T2 R^-1 R^-1");
  CHECK(parse("t1") == parse("T1^-1"));
  CHECK(free_reduce(parse("T0 T0^-1 R")) == parse("R"));
  CHECK_THROWS(parse("Q1"));
  CHECK_THROWS(parse("T7"));

  CHECK(evaluate("R").apply(W("x")) == W("y"));
  CHECK(evaluate("T0").apply(W("y")) == W("x^-1 y"));
  CHECK(evaluate("S0").apply(W("x")) == W("y w x"));
  CHECK(is_identity(evaluate("R^5"), G));
  CHECK_FALSE(is_identity(evaluate("R^2"), G));

  for (const char* s : {"R", "T0", "T1", "T2", "T3", "T4", "S0", "S1", "S2", "S3", "S4"}) {
    CAPTURE(s);
    auto a = evaluate(s);
    CHECK(is_automorphism_certificate(a, G));
    CHECK(is_identity(compose(a, evaluate(format(inverse(parse(s)))), G), G));
    auto M = h1_action(a);
    CHECK(std::abs(oracle::det(M)) == 1);
    auto C = congruence(M, J);
    bool plus = C == J, minus = true;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) minus = minus && C[i][j] == -J[i][j];
    CHECK((plus || minus));
  }
  // conjugation convention
  CHECK(same_automorphism(evaluate("T1"), evaluate("R T0 R^-1"), G));
  CHECK(same_automorphism(evaluate("S1"), evaluate("R^-1 S0 R"), G));
}

TEST_CASE("labelled diagrams") {
  SurfaceGroup G(2);
  auto I = identity_labelled(2);
  CHECK(I.d == zigzag(4));
  CHECK(validate_labels(I, G));
  CHECK(I.chord_labels() == std::vector<Word>{W("x"), W("y"), W("z"), W("w")});

  for (int i = 0; i < 3; ++i) CHECK(validate_labels(phi_labelled(i), G));
  CHECK(validate_labels(rho0_labelled(), SurfaceGroup(1)));

  auto bad = I;
  bad.side[I.d.chords()[0].first] = W("y");
  bad.side[I.d.chords()[0].second] = W("y^-1");
  CHECK_FALSE(validate_labels(bad, G));

  auto rot = rotate(I, 3);
  CHECK(validate_labels(rot, G));
  CHECK(same_labels(rotate(rot, 5), I, G));

  auto a = apply_to_diagram(mcg::evaluate("T0"), I, G);
  CHECK(a.d == I.d);
  CHECK(validate_labels(a, G));
  CHECK(G.equal(a.chord_label(1), W("x^-1 y")));

  // every insertion returned closes its cycles
  int found = 0;
  for (int ga = 0; ga < I.d.points(); ++ga)
    for (int gb = ga + 1; gb < I.d.points(); ++gb)
      if (auto L = insert_chord(I, ga, gb, G)) {
        ++found;
        REQUIRE(L->d.n() == 5);
        REQUIRE(is_k_filling(L->d, 2, 1) == !parallel_pair_exists(L->d));
        REQUIRE(validate_labels(*L, G));
        bool undone = false;
        for (int c = 0; c < 5; ++c) {
          auto D = delete_chord(*L, c);
          undone = undone || (D.d == I.d && same_labels(D, I, G));
        }
        REQUIRE(undone);
      }
  CHECK(found > 0);
}

TEST_CASE("labelled text format") {
  SurfaceGroup G(2);
  auto P = phi_labelled(1);
  auto back = parse_labelled(to_text(P, 2), 2);
  CHECK(back.d == P.d);
  CHECK(same_labels(back, P, G));

  auto err = [](const char* s) {
    try {
      parse_labelled(s, 2);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err("n=2;chords=(0,2)(1,3)\nlabel 0: x\n").find("missing label for chord 1") != std::string::npos);
  CHECK(err("n=2;chords=(0,2)(1,3)\nlabel 7: x\nlabel 1: y\n").find("out of range") != std::string::npos);
  CHECK(err("n=2;chords=(0,2)(1,3)\nlabel 0 x\n").find("expected") != std::string::npos);
  CHECK_FALSE(err("n=2;chords=(0,2)(1,3)\nlabel 0: q\nlabel 1: y\n").empty());
}

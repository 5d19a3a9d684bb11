#include <doctest.h>

#include "fillsys/chain.hpp"
#include "fillsys/enumerate.hpp"
#include "fillsys/verify.hpp"

using namespace fillsys;

TEST_CASE("from_marker moves the marker to point 0") {
  auto d = ChordDiagram::from_chords(3, {{0, 3}, {1, 4}, {2, 5}});
  auto x = OrientedSystem::from_marker(d, 2, -1);
  CHECK(x.d == rotate(d, -2));
  CHECK(x.sign == -1);
}

TEST_CASE("boundary of the three diameters") {
  auto rho = ChordDiagram::from_chords(3, {{0, 3}, {1, 4}, {2, 5}});
  auto faces = boundary_terms(OrientedSystem{rho, 1}, 1, 1);
  REQUIRE(faces.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(equivalent(faces[i].d, zigzag(2)));
    CHECK(faces[i].sign == (i % 2 ? -1 : 1));
  }
  // zigzag(2) has a rotation of sign -1, so only the parity survives
  auto s = boundary(OrientedSystem{rho, 1}, 1, 1);
  REQUIRE(s.size() == 1);
  CHECK(std::abs(s.coefficient(canonical_form(zigzag(2)).matching())) == 1);
}

TEST_CASE("positioned boundary squares to zero") {
  for (auto [g, k] : {std::pair{2, 2}, {3, 2}}) {
    auto cat = orbit_catalog(g, k, false);
    for (auto& d : cat.reps)
      for (int r = 0; r < d.points(); ++r) {
        PositionedSum x;
        x.add(rotate(d, r).matching(), 1);
        auto dd = boundary_positioned(boundary_positioned(x, g, k), g, k - 1);
        REQUIRE(dd.is_zero());
      }
  }
}

TEST_CASE("canonical boundary squares to zero") {
  std::vector<OrientedSystem> samples;
  for (auto& d : orbit_catalog(2, 2, false).reps) {
    samples.push_back({d, 1});
    samples.push_back({rotate(d, 3), -1});
  }
  auto rep = boundary_squared_zero(samples, 2, 2);
  CHECK(rep.ok);
  CHECK(rep.offending.empty());
}

TEST_CASE("canonical orientation sign") {
  auto z = zigzag(4);
  for (int r = 0; r < 8; ++r) {
    auto x = rotate(z, r);
    auto [c, s] = canonical_oriented(x);
    CHECK(c == canonical_form(z));
    CHECK(s == rotation_perm_sign(x, canonical_rotation(x)));
  }
}

TEST_CASE("stabilizer relations") {
  auto r1 = stabilizer_relation(zigzag(2), 1);
  REQUIRE(r1);
  CHECK(*r1 == std::pair{4, -1});
  auto diam = ChordDiagram::from_chords(4, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  auto r2 = stabilizer_relation(diam, 2);
  REQUIRE(r2);
  CHECK(*r2 == std::pair{8, -1});
  CHECK_FALSE(stabilizer_relation(zigzag(4), 2));
}

TEST_CASE("comparing labelled oriented systems") {
  const auto& G = mcg::group();
  auto I = identity_labelled(2);
  LabelledOriented a{I, 1};
  CHECK(compare_oriented(a, a, G) == 1);
  CHECK(compare_oriented(a, LabelledOriented{I, -1}, G) == -1);
  for (int r = 1; r < 8; ++r) {
    LabelledOriented b{rotate(I, r), 1};
    int c = compare_oriented(b, a, G);
    CHECK((c == 1 || c == -1));
    CHECK(compare_oriented(a, b, G) == c);
  }
  LabelledOriented t{apply_to_diagram(mcg::evaluate("T0"), I, G), 1};
  CHECK(compare_oriented(t, a, G) == 0);

  LabelledSum s;
  s.add(a, 3, G);
  s.add(LabelledOriented{rotate(I, 2), 1}, 0, G);
  s.add(t, 1, G);
  CHECK(s.terms().size() == 2);
  s.add(LabelledOriented{I, -1}, 3, G);
  CHECK(s.terms().size() == 1);
  s.add(t, -1, G);
  CHECK(s.is_zero());
}

#include "fillsys/chain.hpp"

#include <stdexcept>

namespace fillsys {

OrientedSystem OrientedSystem::from_marker(const ChordDiagram& d, int mark, int sign) {
  return {rotate(d, -mark), sign};
}

static void check_input(const ChordDiagram& d, int g, int k) {
  if (k <= 0) throw std::invalid_argument("boundary is defined for k >= 1");
  if (!is_k_filling(d, g, k)) throw std::invalid_argument("input is not a k-filling system");
}

std::vector<OrientedSystem> boundary_terms(const OrientedSystem& x, int g, int k) {
  check_input(x.d, g, k);
  std::vector<OrientedSystem> out;
  for (int i = 0; i < x.d.n(); ++i) {
    ChordDiagram f = delete_chord(x.d, i);
    if (f.points() == 0 || !is_k_filling(f, g, k - 1)) continue;
    out.push_back({std::move(f), (i % 2 ? -1 : 1) * x.sign});
  }
  return out;
}

std::vector<LabelledOriented> boundary_terms(const LabelledOriented& x, int g, int k) {
  check_input(x.L.d, g, k);
  std::vector<LabelledOriented> out;
  for (int i = 0; i < x.L.d.n(); ++i) {
    LabelledDiagram f = delete_chord(x.L, i);
    if (f.d.points() == 0 || !is_k_filling(f.d, g, k - 1)) continue;
    out.push_back({std::move(f), (i % 2 ? -1 : 1) * x.sign});
  }
  return out;
}

PositionedSum boundary_positioned(const PositionedSum& x, int g, int k) {
  PositionedSum out;
  for (auto& [m, c] : x.terms())
    for (auto& t : boundary_terms(OrientedSystem{ChordDiagram(m), 1}, g, k)) out.add(t.d.matching(), c * t.sign);
  return out;
}

std::pair<ChordDiagram, int> canonical_oriented(const ChordDiagram& d) {
  int r = canonical_rotation(d);
  return {rotate(d, r), rotation_perm_sign(d, r)};
}

namespace {

// a system fixed by a rotation of sign -1 equals its negative, so its
// class has order 2
PositionedSum coinvariant(const PositionedSum& x) {
  PositionedSum out;
  for (auto& [m, c] : x.terms()) {
    bool torsion = symmetry(ChordDiagram(m)).perm_sign == -1;
    out.add(m, torsion ? ((c % 2) + 2) % 2 : c);
  }
  return out;
}

}  // namespace

PositionedSum boundary(const OrientedSystem& x, int g, int k) {
  PositionedSum out;
  for (auto& t : boundary_terms(x, g, k)) {
    auto [c, s] = canonical_oriented(t.d);
    out.add(c.matching(), t.sign * s);
  }
  return coinvariant(out);
}

PositionedSum boundary(const PositionedSum& x, int g, int k) {
  PositionedSum out;
  for (auto& [m, c] : x.terms()) {
    PositionedSum b = boundary(OrientedSystem{ChordDiagram(m), 1}, g, k);
    for (auto& [mm, cc] : b.terms()) out.add(mm, c * cc);
  }
  return coinvariant(out);
}

SquareReport boundary_squared_zero(const std::vector<OrientedSystem>& samples, int g, int k) {
  SquareReport rep;
  for (auto& x : samples) {
    PositionedSum s;
    s.add(x.d.matching(), x.sign);
    bool ok = boundary_positioned(boundary_positioned(s, g, k), g, k - 1).is_zero();
    // the rotation quotient is compatible with the boundary
    ok = ok && boundary(boundary(x, g, k), g, k - 1).is_zero();
    if (!ok) {
      rep.ok = false;
      rep.offending = to_text(x.d) + ";sign=" + std::to_string(x.sign);
      break;
    }
  }
  return rep;
}

std::optional<std::pair<int, int>> stabilizer_relation(const ChordDiagram& d, int g) {
  if (!is_k_filling(d, g, 0)) throw std::invalid_argument("input is not a 0-filling system");
  auto s = symmetry(d);
  if (s.order == 1) return std::nullopt;
  return std::make_pair(s.order, s.perm_sign);
}

int compare_oriented(const LabelledOriented& a, const LabelledOriented& b, const SurfaceGroup& G) {
  const int N = a.L.d.points();
  if (N != b.L.d.points()) return 0;
  for (int r = 0; r < N; ++r) {
    if (!(rotate(a.L.d, r) == b.L.d)) continue;
    if (same_labels(rotate(a.L, r), b.L, G)) return a.sign * b.sign * rotation_perm_sign(a.L.d, r);
  }
  return 0;
}

void LabelledSum::add(const LabelledOriented& x, long c, const SurfaceGroup& G) {
  if (c == 0) return;
  for (size_t i = 0; i < terms_.size(); ++i) {
    int s = compare_oriented(x, terms_[i].first, G);
    if (!s) continue;
    terms_[i].second += s * c;
    if (terms_[i].second == 0) terms_.erase(terms_.begin() + static_cast<long>(i));
    return;
  }
  terms_.emplace_back(x, c);
}

}  // namespace fillsys

#include "fillsys/verify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fillsys {

LabelledDiagram identity_labelled(int g) {
  std::vector<Word> labels;
  for (int i = 1; i <= 2 * g; ++i) labels.push_back({i});
  return LabelledDiagram::from_chord_labels(zigzag(2 * g), labels);
}

LabelledDiagram phi_labelled(int i) {
  auto w = [](const char* s) { return parse_word(s, 2); };
  switch (i) {
    case 0:
      return identity_labelled(2);
    case 1:
      return LabelledDiagram::from_chord_labels(ChordDiagram({2, 5, 0, 6, 7, 1, 3, 4}),
                                                {w("y"), w("z"), w("wxz"), w("w")});
    case 2:
      return LabelledDiagram::from_chord_labels(ChordDiagram({4, 5, 6, 7, 0, 1, 2, 3}),
                                                {w("xyz"), w("z"), w("wxz"), w("w")});
  }
  throw std::out_of_range("generator index must be 0, 1 or 2");
}

LabelledDiagram rho0_labelled() {
  return LabelledDiagram::from_chord_labels(ChordDiagram({3, 4, 5, 0, 1, 2}), {{1}, {2}, {-1, 2}});
}

int generator_type(const ChordDiagram& d) {
  if (d.n() != 4 || !is_connected(d)) return -1;
  static const std::vector<ChordDiagram> canon = [] {
    std::vector<ChordDiagram> v;
    for (int i = 0; i < 3; ++i) v.push_back(canonical_form(phi_labelled(i).d));
    return v;
  }();
  auto c = canonical_form(d);
  for (int i = 0; i < 3; ++i)
    if (c == canon[i]) return i;
  return -1;
}

namespace {

LabelledOriented act(const mcg::MCWord& w, const LabelledOriented& x) {
  return {apply_to_diagram(mcg::evaluate(w), x.L, mcg::group()), x.sign};
}

mcg::MCWord cat(mcg::MCWord a, const mcg::MCWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return mcg::free_reduce(a);
}

}  // namespace

std::vector<RelationHit> realize_relation(const std::vector<RelationTerm>& rel,
                                          const std::map<int, LabelledOriented>& refs) {
  const auto& G = mcg::group();
  std::vector<int> want;
  for (auto& t : rel) want.push_back(t.type);
  std::sort(want.begin(), want.end());
  // known references first, so the global sign is fixed before solving
  std::vector<size_t> order(rel.size());
  for (size_t j = 0; j < rel.size(); ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return refs.count(rel[a].type) > refs.count(rel[b].type); });

  std::vector<RelationHit> hits;
  for (size_t j0 = 0; j0 < rel.size(); ++j0) {
    auto base = refs.find(rel[j0].type);
    if (base == refs.end()) continue;
    const auto h = mcg::inverse(mcg::parse(rel[j0].word));
    const int N = base->second.L.d.points();
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b) {
        auto al = insert_chord(base->second.L, a, b, G);
        if (!al || !is_k_filling(al->d, 2, 1)) continue;
        std::vector<LabelledOriented> faces;
        for (auto& f : boundary_terms(LabelledOriented{*al, 1}, 2, 1))
          if (is_connected(f.L.d)) faces.push_back(std::move(f));
        if (faces.size() != rel.size()) continue;
        std::vector<int> types;
        for (auto& f : faces) types.push_back(generator_type(f.L.d));
        std::vector<int> sorted_types = types;
        std::sort(sorted_types.begin(), sorted_types.end());
        if (sorted_types != want) continue;

        std::vector<bool> used(faces.size(), false);
        int gs = 0;
        bool ok = true;
        std::map<int, std::pair<LabelledOriented, long>> solved;
        for (size_t j : order) {
          const auto& t = rel[j];
          const auto w = cat(h, mcg::parse(t.word));
          auto known = refs.find(t.type);
          std::optional<LabelledOriented> predicted;
          if (known != refs.end()) predicted = act(w, known->second);
          bool found = false;
          for (size_t i = 0; i < faces.size() && !found; ++i) {
            if (used[i] || types[i] != t.type) continue;
            if (predicted) {
              int s = compare_oriented(faces[i], *predicted, G);
              if (!s) continue;
              if (!gs) gs = static_cast<int>(s * t.coef);
              if (s != gs * t.coef) continue;
            } else {
              if (solved.count(t.type)) continue;
              solved.emplace(t.type, std::make_pair(act(mcg::inverse(w), faces[i]), t.coef));
            }
            used[i] = found = true;
          }
          if (!found) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        RelationHit hit{*al, static_cast<int>(j0), {}};
        for (auto& [type, sc] : solved) {
          auto ref = sc.first;
          ref.sign *= static_cast<int>((gs ? gs : 1) * sc.second);
          hit.derived.emplace(type, ref);
        }
        hits.push_back(std::move(hit));
      }
  }
  return hits;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (auto& [u, c] : a)
    for (auto& [v, d] : b) {
      if ((out[cat(u, v)] += c * d) == 0) out.erase(cat(u, v));
    }
  return out;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out = a;
  for (auto& [v, d] : b)
    if ((out[v] += d) == 0) out.erase(v);
  return out;
}

GroupRingElement operator-(const GroupRingElement& a) {
  GroupRingElement out = a;
  for (auto& [v, c] : out) c = -c;
  return out;
}

namespace {

struct RingParser {
  std::string_view s;
  size_t i = 0;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool at_word() {
    skip();
    return i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])));
  }
  // run of generator tokens, possibly unspaced; "1" is the identity
  mcg::MCWord word() {
    std::string toks;
    while (true) {
      skip();
      if (i >= s.size()) break;
      char c = s[i];
      if (c == '1') {
        ++i;
        continue;
      }
      if (std::string_view("RTSrts").find(c) == std::string_view::npos) break;
      size_t start = i++;
      if (std::toupper(static_cast<unsigned char>(c)) != 'R' && i < s.size()) ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i < s.size() && s[i] == '-') ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      toks += std::string(s.substr(start, i - start)) + ' ';
    }
    return mcg::parse(toks);
  }
  GroupRingElement product() {
    GroupRingElement out{{{}, 1}};
    while (true) {
      skip();
      if (i < s.size() && s[i] == '(') {
        ++i;
        auto inner = sum();
        skip();
        if (i >= s.size() || s[i] != ')') throw std::invalid_argument("missing ')'");
        ++i;
        out = out * inner;
      } else if (at_word()) {
        size_t before = i;
        auto w = mcg::free_reduce(word());
        if (i == before) throw std::invalid_argument("unexpected '" + std::string(1, s[i]) + "' in group ring element");
        out = out * GroupRingElement{{w, 1}};
      } else {
        return out;
      }
    }
  }
  GroupRingElement sum() {
    GroupRingElement out;
    int sign = 1;
    while (true) {
      skip();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      }
      auto p = product();
      out = out + (sign > 0 ? p : -p);
      skip();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) return out;
    }
  }
};

}  // namespace

GroupRingElement parse_group_ring(std::string_view s) {
  RingParser p{s};
  auto out = p.sum();
  p.skip();
  if (p.i != s.size()) throw std::invalid_argument("unexpected '" + std::string(1, s[p.i]) + "' in group ring element");
  return out;
}

std::string format(const GroupRingElement& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : a) {
    if (!first || c < 0) os << (c < 0 ? (first ? "-" : " - ") : " + ");
    long m = c < 0 ? -c : c;
    if (m != 1) os << m << ' ';
    os << mcg::format(w);
    first = false;
  }
  return os.str();
}

bool equal_as_automorphisms(const GroupRingElement& a, const GroupRingElement& b) {
  const auto& G = mcg::group();
  std::vector<std::pair<SurfaceAutomorphism, long>> acc;
  auto add = [&](const GroupRingElement& x, long sign) {
    for (auto& [w, c] : x) {
      auto f = mcg::evaluate(w);
      auto it = std::find_if(acc.begin(), acc.end(), [&](auto& e) { return same_automorphism(e.first, f, G); });
      if (it == acc.end())
        acc.emplace_back(f, sign * c);
      else
        it->second += sign * c;
    }
  };
  add(a, 1);
  add(b, -1);
  return std::all_of(acc.begin(), acc.end(), [](auto& e) { return e.second == 0; });
}

namespace {

std::string mat(const IntMatrix& M) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < M.size(); ++i) {
    os << (i ? ",[" : "[");
    for (size_t j = 0; j < M[i].size(); ++j) os << (j ? "," : "") << M[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

// (sign, matrix) of a genus-1 0-filling as a translate of phi_0
std::pair<int, IntMatrix> as_translate(const LabelledOriented& x) {
  const auto Z = zigzag(2);
  int r = 0;
  while (!(rotate(x.L.d, r) == Z)) ++r;
  return {x.sign * rotation_perm_sign(x.L.d, r), h1_matrix(x.L, 1)};
}

PresentationReport genus1() {
  PresentationReport rep;
  rep.g = 1;
  const SurfaceGroup G(1);
  const IntMatrix A{{0, -1}, {1, 1}}, B{{1, -1}, {0, 1}}, I{{1, 0}, {0, 1}}, J{{0, 1}, {-1, 0}};

  CheckLine b{"boundary of rho_0", false, ""};
  auto rho = rho0_labelled();
  if (validate_labels(rho, G)) {
    auto faces = boundary_terms(LabelledOriented{rho, 1}, 1, 1);
    std::vector<std::pair<int, IntMatrix>> got;
    std::ostringstream os;
    for (auto& f : faces) {
      got.push_back(as_translate(f));
      os << (got.back().first > 0 ? "+" : "-") << mat(got.back().second) << ' ';
    }
    std::vector<std::pair<int, IntMatrix>> want{{1, A}, {-1, B}, {1, I}};
    b.ok = got == want;
    b.detail = os.str();
  } else {
    b.detail = "labels of rho_0 fail the cycle condition";
  }
  rep.checks.push_back(b);

  CheckLine s{"stabilizer of phi_0", false, ""};
  auto phi = identity_labelled(1);
  auto sym = symmetry(phi.d);
  if (sym.order == 4) {
    // phi = perm_sign * rotate(phi, r) and the rotated labels are E phi
    int r = phi.d.points() / sym.order;
    auto E = h1_matrix(rotate(phi, r), 1);
    int sign = rotation_perm_sign(phi.d, r);
    s.ok = sign == -1 && E == J && sym.perm_sign == -1;
    s.detail = "order 4, phi_0 = " + std::string(sign < 0 ? "-" : "") + mat(E) + " phi_0";
  } else {
    s.detail = "rotation order " + std::to_string(sym.order);
  }
  rep.checks.push_back(s);

  rep.relations = {"([[0,-1],[1,1]] - [[1,-1],[0,1]] + 1) f0", "(1 + [[0,1],[-1,0]]) f0"};
  rep.ok = b.ok && s.ok;
  return rep;
}

std::string hit_detail(const std::vector<RelationHit>& hits) {
  std::ostringstream os;
  os << hits.size() << " realizing 1-filling system" << (hits.size() == 1 ? "" : "s");
  if (!hits.empty()) os << ", first " << to_text(hits[0].alpha.d);
  return os.str();
}

PresentationReport genus2() {
  PresentationReport rep;
  rep.g = 2;
  const auto& G = mcg::group();
  std::map<int, LabelledOriented> refs{{0, {phi_labelled(0), 1}}};

  auto R5 = mcg::evaluate("R^5");
  rep.checks.push_back({"R^5 = 1", is_identity(R5, G), is_identity(mcg::evaluate("R"), G) ? "R is trivial" : "R has order 5"});

  const std::string X3 = "S0^-1 T0 S0 T0 S0 T0 T2 S4^-1 S1 S4 R";
  struct Direct {
    std::string name;
    std::vector<RelationTerm> rel;
  };
  std::vector<Direct> direct{
      {"0 = S0^-1 R[phi0] + [phi0]", {{1, "S0^-1 R", 0}, {1, "", 0}}},
      {"0 = -R[phi0] - [phi0] - R^2[phi0] - R^3[phi0] - R^4[phi0]",
       {{-1, "R", 0}, {-1, "", 0}, {-1, "R^2", 0}, {-1, "R^3", 0}, {-1, "R^4", 0}}},
      {"0 = [phi0] - " + X3 + "[phi0]", {{1, "", 0}, {-1, X3, 0}}},
  };
  bool all = rep.checks.back().ok;
  for (auto& d : direct) {
    auto hits = realize_relation(d.rel, refs);
    CheckLine c{d.name, !hits.empty(), hit_detail(hits)};
    if (hits.empty() && d.rel.size() == 2) {
      // report the nearest realizable variant of the long word
      std::string variant = X3;
      variant.replace(variant.find("T2"), 2, "T2^-1");
      auto vh = realize_relation({{1, "", 0}, {-1, variant, 0}}, refs);
      c.detail += "; no 1-filling system has these faces. With T2 -> T2^-1 (" + variant + ") " +
                  hit_detail(vh);
    }
    all = all && c.ok;
    rep.checks.push_back(c);
  }

  // phi_1 and phi_2 solved from their relations, then matched to the reference labels
  auto solve = [&](const std::string& name, const std::vector<RelationTerm>& rel, int type) {
    auto hits = realize_relation(rel, refs);
    CheckLine c{name, false, hit_detail(hits)};
    if (!hits.empty()) {
      LabelledOriented fig{phi_labelled(type), 1};
      int s = compare_oriented(hits[0].derived.at(type), fig, G);
      c.ok = s == 1;
      c.detail += s == 1 ? "; solved generator equals the reference labelling"
                         : (s == -1 ? "; solved generator is minus the reference labelling"
                                    : "; solved generator differs from the reference labelling");
    }
    refs.emplace(type, LabelledOriented{phi_labelled(type), 1});
    all = all && c.ok;
    rep.checks.push_back(c);
  };
  solve("0 = [phi1] - [phi0] + S1^-1[phi0]", {{1, "", 1}, {-1, "", 0}, {1, "S1^-1", 0}}, 1);
  solve("0 = T0[phi2] - [phi1] + T1^-1[phi1]", {{1, "T0", 2}, {-1, "", 1}, {1, "T1^-1", 1}}, 2);

  {
    auto f2 = refs.at(2);
    auto Y = mcg::parse("S3 T2 T0^-1 R^-1");
    int s = compare_oriented(f2, act(Y, f2), G);
    CheckLine c{"phi2 = -S3 T2 T0^-1 R^-1 phi2", s == -1,
                s == -1 ? "rotation of phi2 carries it to minus its translate"
                        : (s == 1 ? "translate equals +phi2" : "translate is not a rotation of phi2")};
    all = all && c.ok;
    rep.checks.push_back(c);
  }

  // eliminate f1 = (1 - S1^-1) f0 and f2 = T0^-1 (1 - T1^-1) f1 in (1 + Y) f2
  {
    auto f1 = parse_group_ring("1 - S1^-1");
    auto f2 = parse_group_ring("T0^-1 (1 - T1^-1)") * f1;
    auto got = parse_group_ring("1 + S3 T2 T0^-1 R^-1") * f2;
    auto expected = parse_group_ring("(1+ S3T2T0^-1R^-1)T0^-1(1 -T1^-1)(1- S1^-1)");
    bool ok = got == expected && equal_as_automorphisms(got, expected);
    // the direct checks give the first three relations as they stand
    ok = ok && parse_group_ring("1+S0^-1R") == parse_group_ring("S0^-1 R + 1");
    ok = ok && -parse_group_ring("1 + R + R^2 + R^3 + R^4") == parse_group_ring("-R - 1 - R^2 - R^3 - R^4");
    ok = ok && parse_group_ring("1 - " + X3) == parse_group_ring("1 - S0^-1T0S0T0S0T0T2S4^-1S1S4R");
    rep.checks.push_back({"elimination of f1, f2", ok, format(got)});
    all = all && ok;
  }

  rep.relations = {"(1+S0^-1 R) f0", "(1+R+R^2+R^3+R^4) f0", "(1-" + X3 + ") f0",
                   "(1+S3 T2 T0^-1 R^-1) T0^-1 (1-T1^-1) (1-S1^-1) f0"};
  rep.ok = all;
  return rep;
}

}  // namespace

PresentationReport verify_presentation(int g) {
  if (g == 1) return genus1();
  if (g == 2) return genus2();
  throw std::out_of_range("verify_presentation supports genus 1 and 2");
}

}  // namespace fillsys

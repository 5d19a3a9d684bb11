#include "fillsys/reduction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fillsys {

TailDescriptor tail_at(const ChordDiagram& d, int p) {
  const int N = d.points();
  auto at = [&](int q) { return ((q % N) + N) % N; };
  TailDescriptor t;
  t.start = at(p);
  t.chords.push_back(d.chord_of(at(p)));
  if (d.mate(at(p)) != at(p + 2)) return t;
  // t_1 = (p, p+2) and t_2 sits at p+1; extend while t_k hits p+2k
  int n = 2;
  t.chords.push_back(d.chord_of(at(p + 1)));
  while (n < d.n() && d.mate(at(p + 2 * n - 3)) == at(p + 2 * n)) {
    ++n;
    t.chords.push_back(d.chord_of(at(p + 2 * n - 3)));
  }
  return t;
}

TailDescriptor find_salient_tail(const ChordDiagram& d, int g, bool prefer_last) {
  if (!is_k_filling(d, g, 0) || !is_connected(d))
    throw std::invalid_argument("find_salient_tail needs a connected 0-filling system");
  TailDescriptor best;
  for (int p = 0; p < d.points(); ++p) {
    auto t = tail_at(d, p);
    if (t.length() > best.length() || (prefer_last && t.length() == best.length())) best = std::move(t);
  }
  return best;
}

namespace {

bool salient_zigzag(const ChordDiagram& d, int g) {
  return d.n() == 2 * g && is_connected(d) && equivalent(d, zigzag(2 * g));
}

// a tail of length >= n containing c, with the first n chords checked
std::optional<TailDescriptor> tail_with(const ChordDiagram& d, int n, int c) {
  for (int p = 0; p < d.points(); ++p) {
    auto t = tail_at(d, p);
    if (t.length() < n) continue;
    t.chords.resize(n);
    if (std::find(t.chords.begin(), t.chords.end(), c) != t.chords.end()) return t;
  }
  return std::nullopt;
}

}  // namespace

Extension extend_tail(const LabelledDiagram& L, const TailDescriptor& tail, int g, const SurfaceGroup& G) {
  const int n = tail.length();
  if (n >= 2 * g) throw std::invalid_argument("tail already covers the diagram");
  const int N = L.d.points();
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      auto Lc = insert_chord(L, a, b, G);
      if (!Lc || !is_k_filling(Lc->d, g, 1)) continue;  // (a)
      const int c = Lc->d.chord_of(a + 1);
      // (c): deleting c gives back L, labels included
      LabelledDiagram back = delete_chord(*Lc, c);
      if (!(back.d == L.d) || back.side != L.side) continue;
      auto t = tail_with(Lc->d, n + 1, c);  // (b)
      if (!t) continue;
      bool splits = true;  // (d)
      for (int tc : t->chords) {
        if (tc == c) continue;
        ChordDiagram f = delete_chord(Lc->d, tc);
        if (f.points() != 0 && is_connected(f)) splits = false;
      }
      if (!splits) continue;
      return {std::move(*Lc), c, std::move(*t), a, b};
    }
  throw std::logic_error("no insertion slot extends the salient tail");
}

std::vector<ConnectionCertificate> connection_relations(const LabelledDiagram& L, int g, const SurfaceGroup& G) {
  std::vector<ConnectionCertificate> out;
  if (is_connected(L.d)) return out;
  const int N = L.d.points();
  auto comps = components(L.d);
  std::vector<int> comp_of(L.d.n());
  for (size_t i = 0; i < comps.size(); ++i)
    for (int c : comps[i]) comp_of[c] = static_cast<int>(i);
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      // points a+1..b lie on one side of the new chord; both sides must be
      // nonempty unions of whole components
      std::vector<int> side(comps.size(), -1);
      bool ok = true;
      for (int p = 0; p < N && ok; ++p) {
        int s = (p > a && p <= b) ? 1 : 0;
        int& cs = side[comp_of[L.d.chord_of(p)]];
        if (cs == -1) cs = s;
        ok = cs == s;
      }
      if (!ok) continue;
      if (std::all_of(side.begin(), side.end(), [&](int s) { return s == side[0]; })) continue;
      auto Lc = insert_chord(L, a, b, G);
      if (!Lc || !is_k_filling(Lc->d, g, 1)) continue;
      int c = Lc->d.chord_of(a + 1);
      auto faces = boundary_terms(LabelledOriented{*Lc, 1}, g, 1);
      out.push_back({std::move(*Lc), c, std::move(faces)});
    }
  return out;
}

std::optional<ConnectionCertificate> connection_relation(const LabelledDiagram& L, int g,
                                                         const SurfaceGroup& G) {
  if (is_connected(L.d)) return std::nullopt;
  auto all = connection_relations(L, g, G);
  if (all.empty()) throw std::logic_error("no separating chord found for a disconnected diagram");
  return std::move(all.front());
}

namespace {

struct Reducer {
  int g;
  const SurfaceGroup& G;
  ReduceOptions opt;
  ChordDiagram Z;
  ReductionResult res;
  // canonical key -> (system, expansion of +system)
  std::map<std::string, std::vector<std::pair<LabelledOriented, std::vector<std::pair<LabelledOriented, long>>>>> memo;

  std::string key(const LabelledDiagram& L) const {
    int r = canonical_rotation(L.d);
    auto R = rotate(L, r);
    std::ostringstream os;
    for (int v : R.d.matching()) os << v << ',';
    for (auto& w : R.chord_labels())
      for (long e : exponent_sums(w, g)) os << e << ' ';
    return os.str();
  }

  void log(int depth, const std::string& s) {
    if (opt.trace) res.steps.push_back(std::string(2 * depth, ' ') + s);
  }

  // expansion of +L into S_2g terms
  std::vector<std::pair<LabelledOriented, long>> expand(const LabelledDiagram& L, int depth) {
    if (depth > 2 * g) throw std::logic_error("reduction exceeded 2g extension rounds");
    res.max_rounds = std::max(res.max_rounds, depth);
    if (!is_connected(L.d)) {
      auto cert = connection_relation(L, g, G);
      if (cert->boundary.size() != 1) throw std::logic_error("connection relation has more than one term");
      log(depth, "disconnected: " + to_text(L.d) + " is a boundary");
      return {};
    }
    if (salient_zigzag(L.d, g)) {
      int r = 0;
      while (!(rotate(L.d, r) == Z)) ++r;
      LabelledOriented t{rotate(L, r), 1};
      log(depth, "salient: " + to_text(L.d));
      return {{t, rotation_perm_sign(L.d, r)}};
    }
    std::string k;
    if (opt.memo) {
      k = key(L);
      auto it = memo.find(k);
      if (it != memo.end())
        for (auto& [sys, exp] : it->second) {
          int s = compare_oriented(LabelledOriented{L, 1}, sys, G);
          if (!s) continue;
          auto out = exp;
          for (auto& e : out) e.second *= s;
          return out;
        }
    }
    auto tail = find_salient_tail(L.d, g, opt.prefer_last_tail);
    auto ext = extend_tail(L, tail, g, G);
    log(depth, "extend " + to_text(L.d) + " tail " + std::to_string(tail.length()) + " -> " + to_text(ext.Lc.d));
    // d(L_c) = sigma L + sum tau_i B_i = 0 in St
    auto faces = boundary_terms(LabelledOriented{ext.Lc, 1}, g, 1);
    const int sigma = ext.chord % 2 ? -1 : 1;
    std::vector<std::pair<LabelledOriented, long>> out;
    for (int i = 0, f = 0; i < ext.Lc.d.n(); ++i) {
      ChordDiagram fd = delete_chord(ext.Lc.d, i);
      if (fd.points() == 0 || !is_k_filling(fd, g, 0)) continue;
      const auto& face = faces[f++];
      if (i == ext.chord) continue;
      for (auto& [t, c] : expand(face.L, depth + 1)) out.emplace_back(t, c * -sigma * face.sign);
    }
    // merge equal terms
    LabelledSum merged;
    for (auto& [t, c] : out) merged.add(t, c, G);
    out = merged.terms();
    if (opt.memo) memo[k].emplace_back(LabelledOriented{L, 1}, out);
    return out;
  }
};

}  // namespace

ReductionResult reduce(const LabelledDiagram& L, int g, const SurfaceGroup& G, const ReduceOptions& opt) {
  if (!is_k_filling(L.d, g, 0)) throw std::invalid_argument("reduce needs a 0-filling system");
  if (!validate_labels(L, G)) throw std::invalid_argument("labels fail the cycle condition");
  Reducer r{g, G, opt, zigzag(2 * g), {}, {}};
  for (auto& [t, c] : r.expand(L, 0)) r.res.terms.add(t, c, G);
  return std::move(r.res);
}

IntMatrix crossing_form(int g) {
  auto ch = zigzag(2 * g).chords();
  const int n = 2 * g;
  IntMatrix J(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto [a, b] = ch[i];
      auto [c, d] = ch[j];
      if (a < c && c < b && b < d) {
        J[i][j] = 1;
        J[j][i] = -1;
      }
    }
  return J;
}

long determinant(IntMatrix M) {
  // fraction-free Bareiss elimination
  const int n = static_cast<int>(M.size());
  long sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && M[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(M[piv], M[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

IntMatrix h1_matrix(const LabelledDiagram& t, int g) {
  const ChordDiagram Z = zigzag(2 * g);
  int r = 0;
  while (r < t.d.points() && !(rotate(t.d, r) == Z)) ++r;
  if (r == t.d.points()) throw std::invalid_argument("h1_matrix needs the zigzag diagram");
  auto labels = rotate(t, r).chord_labels();
  const int n = 2 * g;
  IntMatrix M(n, std::vector<long>(n, 0));
  for (int j = 0; j < n; ++j) {
    auto e = exponent_sums(labels[j], g);
    for (int i = 0; i < n; ++i) M[i][j] = e[i];
  }
  long det = determinant(M);
  if (det != 1 && det != -1) throw std::logic_error("translate matrix is not unimodular");
  if (!preserves_form(M, crossing_form(g))) throw std::logic_error("translate matrix breaks the crossing form");
  return M;
}

bool preserves_form(const IntMatrix& M, const IntMatrix& J) {
  const int n = static_cast<int>(M.size());
  IntMatrix P(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) P[i][j] += M[a][i] * J[a][b] * M[b][j];
  auto neg = J;
  for (auto& row : neg)
    for (auto& v : row) v = -v;
  return P == J || P == neg;
}

namespace {

using Slope = std::pair<long, long>;

Slope slope(std::vector<long> v) {
  long g = std::gcd(v[0], v[1]);
  if (g != 1) throw std::invalid_argument("label is not primitive");
  if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) return {-v[0], -v[1]};
  return {v[0], v[1]};
}

void add_symbol(FormalSum<Slope>& s, const LabelledDiagram& L, long c) {
  auto lab = L.chord_labels();
  auto u = exponent_sums(lab.at(0), 1), v = exponent_sums(lab.at(1), 1);
  long det = u[0] * v[1] - u[1] * v[0];
  if (det != 1 && det != -1) throw std::invalid_argument("labels are not unimodular");
  s.add(slope(v), c);
  s.add(slope(u), -c);
}

}  // namespace

bool modular_symbol_oracle(const LabelledDiagram& L, const ReductionResult& r) {
  if (L.d.n() != 2) throw std::invalid_argument("oracle is for genus 1");
  FormalSum<Slope> lhs, rhs;
  add_symbol(lhs, L, 1);
  for (auto& [t, c] : r.terms.terms()) add_symbol(rhs, t.L, c * t.sign);
  return lhs == rhs;
}

}  // namespace fillsys

#include "fillsys/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fillsys {

namespace {

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SNFResult smith_normal_form(BigMatrix M) {
  SNFResult res;
  const size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  for (auto& r : M)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  const size_t n = std::min(rows, cols);
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block
      size_t pr = rows, pc = cols;
      BigInt best = 0;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j)
          if (M[i][j] != 0 && (best == 0 || babs(M[i][j]) < best)) {
            best = babs(M[i][j]);
            pr = i;
            pc = j;
          }
      if (pr == rows) {
        res.rank = static_cast<int>(t);
        for (size_t k = t; k < n; ++k) res.diagonal.push_back(0);
        return res;
      }
      std::swap(M[t], M[pr]);
      for (auto& r : M) std::swap(r[t], r[pc]);

      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (M[i][t] == 0) continue;
        BigInt q = M[i][t] / M[t][t];
        for (size_t j = t; j < cols; ++j)
          if (M[t][j] != 0) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (M[t][j] == 0) continue;
        BigInt q = M[t][j] / M[t][t];
        for (size_t i = t; i < rows; ++i)
          if (M[i][t] != 0) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // the pivot must divide the rest; otherwise fold the offending row in
      size_t bad = rows;
      for (size_t i = t + 1; i < rows && bad == rows; ++i)
        for (size_t j = t + 1; j < cols; ++j)
          if (M[i][j] % M[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (size_t j = t; j < cols; ++j) M[t][j] += M[bad][j];
    }
    res.diagonal.push_back(babs(M[t][t]));
  }
  res.rank = static_cast<int>(n);
  return res;
}

SimplicialComplex::SimplicialComplex(int vertices, std::vector<std::vector<int>> facets)
    : vertices_(vertices), facets_(std::move(facets)) {
  for (auto& f : facets_) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw std::invalid_argument("empty facet");
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw std::invalid_argument("facet repeats a vertex");
    if (f.front() < 0 || f.back() >= vertices_) throw std::invalid_argument("vertex index out of range");
  }
  for (size_t i = 0; i < facets_.size(); ++i)
    for (size_t j = 0; j < facets_.size(); ++j)
      if (i != j && std::includes(facets_[j].begin(), facets_[j].end(), facets_[i].begin(), facets_[i].end()))
        throw std::invalid_argument("facet contained in another facet");
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

std::vector<std::vector<int>> SimplicialComplex::faces(int dim) const {
  if (dim < -1) return {};
  if (dim == -1) return {{}};
  std::set<std::vector<int>> out;
  const size_t k = static_cast<size_t>(dim) + 1;
  for (auto& f : facets_) {
    if (f.size() < k) continue;
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<int> s;
      for (size_t i = 0; i < f.size(); ++i)
        if (pick[i]) s.push_back(f[i]);
      out.insert(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {out.begin(), out.end()};
}

SimplicialComplex parse_complex(std::string_view text) {
  std::vector<std::vector<int>> facets;
  int top = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<int> f;
    std::string tok;
    while (ls >> tok) {
      size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad vertex '" + tok + "'");
      f.push_back(v);
      top = std::max(top, v);
    }
    if (!f.empty()) facets.push_back(std::move(f));
  }
  return SimplicialComplex(top + 1, std::move(facets));
}

BigMatrix boundary_matrix(const SimplicialComplex& K, int dim) {
  auto rows = K.faces(dim - 1), cols = K.faces(dim);
  std::map<std::vector<int>, size_t> index;
  for (size_t i = 0; i < rows.size(); ++i) index[rows[i]] = i;
  BigMatrix M(rows.size(), std::vector<BigInt>(cols.size(), 0));
  for (size_t j = 0; j < cols.size(); ++j)
    for (size_t v = 0; v < cols[j].size(); ++v) {
      auto f = cols[j];
      f.erase(f.begin() + static_cast<long>(v));
      M[index.at(f)][j] = v % 2 ? -1 : 1;
    }
  return M;
}

HomologyGroup homology(const SimplicialComplex& K, int i) {
  if (i < 0) throw std::invalid_argument("degree must be >= 0");
  HomologyGroup h;
  const long ci = static_cast<long>(K.faces(i).size());
  if (ci == 0) return h;
  auto lower = smith_normal_form(boundary_matrix(K, i));
  auto upper = smith_normal_form(boundary_matrix(K, i + 1));
  h.betti = ci - lower.rank - upper.rank;
  for (auto& d : upper.diagonal)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

std::string format(const HomologyGroup& h) {
  if (h.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (h.betti) {
    os << "Z";
    if (h.betti > 1) os << '^' << h.betti;
    first = false;
  }
  for (auto& t : h.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

std::vector<std::pair<int, int>> polygon_diagonals(int N) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < N; ++a)
    for (int b = a + 2; b < N; ++b)
      if (!(a == 0 && b == N - 1)) out.emplace_back(a, b);
  return out;
}

SimplicialComplex associahedron_dual_boundary(int N) {
  if (N < 4) throw std::invalid_argument("polygon needs at least 4 sides");
  auto diag = polygon_diagonals(N);
  const int D = static_cast<int>(diag.size());
  auto cross = [&](int i, int j) {
    auto [a, b] = diag[i];
    auto [c, d] = diag[j];
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
  };
  std::vector<std::vector<int>> facets;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == N - 3) {
      facets.push_back(cur);
      return;
    }
    for (int i = from; i < D; ++i) {
      if (std::any_of(cur.begin(), cur.end(), [&](int j) { return cross(i, j); })) continue;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return SimplicialComplex(D, std::move(facets));
}

ThetaReport theta_sphere_check(int g) {
  if (g < 1 || g > 3) throw std::out_of_range("theta_sphere_check supports 1 <= g <= 3");
  ThetaReport rep;
  rep.g = g;
  rep.polygon = 2 * g + 2;
  auto K = associahedron_dual_boundary(rep.polygon);
  rep.facet_size = static_cast<int>(K.facets().front().size());
  rep.pure = std::all_of(K.facets().begin(), K.facets().end(),
                         [&](auto& f) { return static_cast<int>(f.size()) == rep.facet_size; });
  const int dim = K.dimension();
  for (int d = 0; d <= dim; ++d) rep.face_counts.push_back(K.faces(d).size());
  int nonzero = 0;
  for (int d = 0; d <= dim; ++d) {
    rep.reduced.push_back(homology(K, d));
    const auto& h = rep.reduced.back();
    if (!h.is_zero()) {
      ++nonzero;
      if (h.betti == 1 && h.torsion.empty()) rep.sphere_degree = d;
    }
  }
  if (nonzero != 1) rep.sphere_degree = -1;
  rep.ok = rep.pure && rep.facet_size == 2 * g - 1 && rep.sphere_degree == 2 * g - 2;
  return rep;
}

}  // namespace fillsys

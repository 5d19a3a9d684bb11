#include "fillsys/automorphism.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fillsys {

SurfaceAutomorphism SurfaceAutomorphism::identity(int g) {
  SurfaceAutomorphism a;
  for (int i = 1; i <= 2 * g; ++i) a.images.push_back({i});
  return a;
}

Word SurfaceAutomorphism::apply(const Word& w) const {
  Word out;
  for (int l : w) {
    int k = std::abs(l);
    if (k < 1 || k > static_cast<int>(images.size()))
      throw std::out_of_range("generator index out of range");
    const Word& img = images[k - 1];
    if (l > 0)
      out.insert(out.end(), img.begin(), img.end());
    else {
      Word inv = fillsys::inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

SurfaceAutomorphism compose(const SurfaceAutomorphism& a, const SurfaceAutomorphism& b,
                            const SurfaceGroup& G) {
  if (a.images.size() != b.images.size()) throw std::invalid_argument("genus mismatch");
  SurfaceAutomorphism c;
  for (const Word& img : b.images) c.images.push_back(G.reduce(a.apply(img)));
  return c;
}

bool is_identity(const SurfaceAutomorphism& a, const SurfaceGroup& G) {
  for (int i = 0; i < static_cast<int>(a.images.size()); ++i)
    if (!G.equal(a.images[i], {i + 1})) return false;
  return true;
}

bool same_automorphism(const SurfaceAutomorphism& a, const SurfaceAutomorphism& b,
                       const SurfaceGroup& G) {
  if (a.images.size() != b.images.size()) return false;
  for (size_t i = 0; i < a.images.size(); ++i)
    if (!G.equal(a.images[i], b.images[i])) return false;
  return true;
}

bool is_automorphism_certificate(const SurfaceAutomorphism& a, const SurfaceGroup& G) {
  return G.conjugate_of_relator(a.apply(G.relator()));
}

std::vector<std::vector<long>> h1_action(const SurfaceAutomorphism& a) {
  const int n = static_cast<int>(a.images.size());
  std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
  for (int j = 0; j < n; ++j) {
    auto e = exponent_sums(a.images[j], n / 2);
    for (int i = 0; i < n; ++i) M[i][j] = e[i];
  }
  return M;
}

namespace mcg {

namespace {

constexpr int x = 1, y = 2, z = 3, w = 4;

SurfaceAutomorphism make(Word ix, Word iy, Word iz, Word iw) {
  return SurfaceAutomorphism{{std::move(ix), std::move(iy), std::move(iz), std::move(iw)}};
}

struct Table {
  SurfaceAutomorphism R, Rinv;
  std::array<SurfaceAutomorphism, 5> T, Tinv, S, Sinv;

  Table() {
    const auto& G = group();
    R = make({y}, {z}, {w}, {-z, -x, -w, -y});
    Rinv = make({-z, -x, -w, -y}, {x}, {y}, {z});
    T[0] = make({x}, {-x, y}, {z}, {w});
    Tinv[0] = make({x}, {x, y}, {z}, {w});
    S[0] = make({y, w, x}, {y}, {z}, {w});
    Sinv[0] = make({-w, -y, x}, {y}, {z}, {w});
    auto conj = [&](const SurfaceAutomorphism& p, const SurfaceAutomorphism& a,
                    const SurfaceAutomorphism& q) { return compose(compose(p, a, G), q, G); };
    SurfaceAutomorphism Rp = SurfaceAutomorphism::identity(2), Rm = Rp;
    for (int i = 1; i < 5; ++i) {
      Rp = compose(R, Rp, G);
      Rm = compose(Rinv, Rm, G);
      // T_i = R^i T_0 R^-i, S_i = R^-i S_0 R^i
      T[i] = conj(Rp, T[0], Rm);
      Tinv[i] = conj(Rp, Tinv[0], Rm);
      S[i] = conj(Rm, S[0], Rp);
      Sinv[i] = conj(Rm, Sinv[0], Rp);
    }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

}  // namespace

const SurfaceGroup& group() {
  static const SurfaceGroup G(2);
  return G;
}

const SurfaceAutomorphism& generator(const Token& t) {
  const auto& tb = table();
  switch (t.kind) {
    case 'R':
      return t.inverse ? tb.Rinv : tb.R;
    case 'T':
      return t.inverse ? tb.Tinv.at(t.index) : tb.T.at(t.index);
    case 'S':
      return t.inverse ? tb.Sinv.at(t.index) : tb.S.at(t.index);
  }
  throw std::invalid_argument("unknown mapping class");
}

MCWord parse(std::string_view s) {
  MCWord out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    Token t{};
    char c = tok[0];
    t.kind = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (t.kind != 'R' && t.kind != 'T' && t.kind != 'S')
      throw std::invalid_argument("unknown mapping class '" + tok + "'");
    t.inverse = std::islower(static_cast<unsigned char>(c)) != 0;
    size_t i = 1;
    if (t.kind != 'R') {
      if (i >= tok.size() || tok[i] < '0' || tok[i] > '4')
        throw std::invalid_argument("expected index 0..4 in '" + tok + "'");
      t.index = tok[i] - '0';
      ++i;
    }
    std::string rest = tok.substr(i);
    int e = 1;
    if (!rest.empty()) {
      size_t used = 0;
      try {
        if (rest[0] != '^') throw std::invalid_argument("");
        e = std::stoi(rest.substr(1), &used);
      } catch (const std::exception&) {
        used = std::string::npos;
      }
      if (used != rest.size() - 1) throw std::invalid_argument("bad exponent in '" + tok + "'");
    }
    if (e < 0) t.inverse = !t.inverse;
    for (int k = 0; k < std::abs(e); ++k) out.push_back(t);
  }
  return out;
}

std::string format(const MCWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << w[i].kind;
    if (w[i].kind != 'R') os << w[i].index;
    if (w[i].inverse) os << "^-1";
  }
  return os.str();
}

MCWord inverse(const MCWord& w) {
  MCWord out(w.rbegin(), w.rend());
  for (auto& t : out) t.inverse = !t.inverse;
  return out;
}

MCWord free_reduce(const MCWord& w) {
  MCWord out;
  for (const auto& t : w) {
    if (!out.empty() && out.back().kind == t.kind && out.back().index == t.index &&
        out.back().inverse != t.inverse)
      out.pop_back();
    else
      out.push_back(t);
  }
  return out;
}

SurfaceAutomorphism evaluate(const MCWord& w) {
  const auto& G = group();
  SurfaceAutomorphism a = SurfaceAutomorphism::identity(2);
  for (const auto& t : w) a = compose(a, generator(t), G);
  return a;
}

SurfaceAutomorphism evaluate(std::string_view s) { return evaluate(parse(s)); }

}  // namespace mcg

}  // namespace fillsys

#include "fillsys/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fillsys {

std::string validation_error(const std::vector<int>& m) {
  const int N = static_cast<int>(m.size());
  if (N % 2) return "odd number of points";
  for (int i = 0; i < N; ++i) {
    if (m[i] < 0 || m[i] >= N) return "point " + std::to_string(i) + " paired out of range";
    if (m[i] == i) return "point " + std::to_string(i) + " paired with itself";
    if (m[m[i]] != i) return "point " + std::to_string(i) + " paired twice";
  }
  for (int i = 0; i < N; ++i) {
    if (m[i] == (i + 1) % N || m[i] == (i + N - 1) % N)
      return "adjacent pairing at point " + std::to_string(std::min(i, m[i]));
  }
  return {};
}

ChordDiagram::ChordDiagram(std::vector<int> matching) : m_(std::move(matching)) {
  auto err = validation_error(m_);
  if (!err.empty()) throw std::invalid_argument(err);
}

ChordDiagram ChordDiagram::from_chords(int n, const std::vector<Chord>& chords) {
  std::vector<int> m(2 * n, -1);
  if (static_cast<int>(chords.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " chords");
  for (auto [a, b] : chords) {
    if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n)
      throw std::invalid_argument("point out of range");
    if (m[a] != -1 || m[b] != -1 || a == b)
      throw std::invalid_argument("point " + std::to_string(m[a] != -1 ? a : b) + " paired twice");
    m[a] = b;
    m[b] = a;
  }
  return ChordDiagram(std::move(m));
}

std::vector<Chord> ChordDiagram::chords() const {
  std::vector<Chord> out;
  for (int i = 0; i < points(); ++i)
    if (i < m_[i]) out.emplace_back(i, m_[i]);
  return out;
}

int ChordDiagram::chord_of(int p) const {
  int lo = std::min(p, m_[p]);
  int idx = 0;
  for (int i = 0; i < lo; ++i)
    if (i < m_[i]) ++idx;
  return idx;
}

CycleDecomposition cycles(const ChordDiagram& d) {
  const int N = d.points();
  std::vector<char> seen(N, 0);
  CycleDecomposition out;
  for (int s = 0; s < N; ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int i = s; !seen[i]; i = (d.mate(i) + 1) % N) {
      seen[i] = 1;
      cyc.push_back(i);
    }
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

int genus(const ChordDiagram& d) {
  int e = d.n() + 1 - cycles(d).b();
  if (e % 2) throw std::logic_error("odd Euler defect: cycle count bug");
  return e / 2;
}

bool parallel_pair_exists(const ChordDiagram& d) {
  for (auto& c : cycles(d).cycles)
    if (c.size() == 2) return true;
  return false;
}

bool is_k_filling(const ChordDiagram& d, int g, int k) {
  if (d.n() != 2 * g + k) return false;
  auto cd = cycles(d);
  if (cd.b() != k + 1) return false;
  for (auto& c : cd.cycles)
    if (c.size() <= 2) return false;
  return true;
}

bool crosses(const ChordDiagram&, Chord c1, Chord c2) {
  auto [p, q] = c1;
  if (p > q) std::swap(p, q);
  auto in = [&](int x) { return p < x && x < q; };
  return in(c2.first) != in(c2.second);
}

std::vector<std::vector<int>> components(const ChordDiagram& d) {
  auto ch = d.chords();
  const int n = static_cast<int>(ch.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (crosses(d, ch[i], ch[j])) parent[find(i)] = find(j);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

bool is_connected(const ChordDiagram& d) { return components(d).size() <= 1; }

ChordDiagram rotate(const ChordDiagram& d, int r) {
  const int N = d.points();
  r = ((r % N) + N) % N;
  std::vector<int> m(N);
  for (int i = 0; i < N; ++i) m[(i + r) % N] = (d.mate(i) + r) % N;
  return ChordDiagram(std::move(m));
}

static int perm_sign(std::vector<int> p) {
  int s = 1;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      s = -s;
    }
  return s;
}

int rotation_perm_sign(const ChordDiagram& d, int r) {
  const int N = d.points();
  r = ((r % N) + N) % N;
  auto rd = rotate(d, r);
  std::vector<int> p;
  for (auto [a, b] : d.chords()) p.push_back(rd.chord_of((a + r) % N));
  return perm_sign(std::move(p));
}

int canonical_rotation(const ChordDiagram& d) {
  int best = 0;
  ChordDiagram cur = d;
  for (int r = 1; r < d.points(); ++r) {
    auto c = rotate(d, r);
    if (c.matching() < cur.matching()) {
      cur = c;
      best = r;
    }
  }
  return best;
}

ChordDiagram canonical_form(const ChordDiagram& d) {
  if (d.points() == 0) return d;
  return rotate(d, canonical_rotation(d));
}

SymmetryReport symmetry(const ChordDiagram& d) {
  SymmetryReport rep;
  const int N = d.points();
  int first = 0;
  int fixed = 0;
  for (int r = 0; r < N; ++r)
    if (rotate(d, r) == d) {
      ++fixed;
      if (r > 0 && !first) first = r;
    }
  rep.order = std::max(fixed, 1);
  rep.perm_sign = first ? rotation_perm_sign(d, first) : 1;
  return rep;
}

ChordDiagram zigzag(int m) {
  if (m < 2) throw std::invalid_argument("zigzag needs m >= 2");
  std::vector<Chord> ch{{0, 2}};
  for (int i = 1; i <= m - 2; ++i) ch.emplace_back(2 * i - 1, 2 * i + 2);
  ch.emplace_back(2 * m - 3, 2 * m - 1);
  return ChordDiagram::from_chords(m, ch);
}

std::vector<int> induced_matching(const ChordDiagram& d, const std::vector<int>& chord_ids) {
  auto ch = d.chords();
  std::vector<int> pts;
  for (int c : chord_ids) {
    pts.push_back(ch[c].first);
    pts.push_back(ch[c].second);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<int> idx(d.points(), -1);
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) idx[pts[i]] = i;
  std::vector<int> m(pts.size());
  for (int p : pts) m[idx[p]] = idx[d.mate(p)];
  return m;
}

ChordDiagram induced(const ChordDiagram& d, const std::vector<int>& chord_ids) {
  return ChordDiagram(induced_matching(d, chord_ids));
}

bool equivalent(const ChordDiagram& a, const ChordDiagram& b) {
  return a.points() == b.points() && canonical_form(a) == canonical_form(b);
}

bool is_salient(const ChordDiagram& d) {
  for (auto& comp : components(d)) {
    int m = static_cast<int>(comp.size());
    if (m < 2) return false;
    // a component can pair neighbours in its own order (a nested leaf)
    auto mm = induced_matching(d, comp);
    if (!validation_error(mm).empty()) return false;
    if (!equivalent(ChordDiagram(std::move(mm)), zigzag(m))) return false;
  }
  return true;
}

ChordDiagram delete_chord(const ChordDiagram& d, int chord_id) {
  auto [a, b] = d.chords().at(chord_id);
  const int N = d.points();
  std::vector<int> idx(N, -1);
  int k = 0;
  for (int p = 0; p < N; ++p)
    if (p != a && p != b) idx[p] = k++;
  std::vector<int> m(N - 2);
  for (int p = 0; p < N; ++p)
    if (idx[p] >= 0) m[idx[p]] = idx[d.mate(p)];
  // an adjacent pair left behind is never filling; report it as empty
  if (!validation_error(m).empty()) return ChordDiagram();
  return ChordDiagram(std::move(m));
}

std::string to_text(const ChordDiagram& d) {
  std::ostringstream os;
  os << "n=" << d.n() << ";chords=";
  for (auto [a, b] : d.chords()) os << '(' << a << ',' << b << ')';
  return os.str();
}

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;
  int line = 1, col = 1;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) bump();
  }
  void bump() {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  bool eof() {
    skip();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& why) { throw ParseError(line, col, why); }
  void expect(char c) {
    skip();
    if (i >= s.size() || s[i] != c) fail(std::string("expected '") + c + "'");
    bump();
  }
  bool accept(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      bump();
      return true;
    }
    return false;
  }
  std::string word() {
    skip();
    std::string w;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      w += s[i];
      bump();
    }
    if (w.empty()) fail("expected a key");
    return w;
  }
  long integer() {
    skip();
    std::string w;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      w += s[i];
      bump();
    }
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      w += s[i];
      bump();
    }
    if (w.empty() || w == "-" || w == "+") fail("expected an integer");
    return std::stol(w);
  }
};

}  // namespace

DiagramRecord parse_record(std::string_view text) {
  Cursor c{text};
  DiagramRecord rec;
  bool have_n = false, have_chords = false;
  std::vector<std::tuple<int, int, int, int>> raw;  // a, b, line, col
  while (!c.eof()) {
    std::string key = c.word();
    c.expect('=');
    if (key == "n") {
      long n = c.integer();
      if (n < 0 || n > 1000) c.fail("chord count out of range");
      rec.n = static_cast<int>(n);
      have_n = true;
    } else if (key == "chords") {
      have_chords = true;
      while (c.accept('(')) {
        int l = c.line, co = c.col;
        long a = c.integer();
        c.expect(',');
        long b = c.integer();
        c.expect(')');
        raw.emplace_back(static_cast<int>(a), static_cast<int>(b), l, co);
      }
    } else if (key == "mark") {
      rec.mark = static_cast<int>(c.integer());
    } else if (key == "sign") {
      long s = c.integer();
      if (s != 1 && s != -1) c.fail("sign must be +1 or -1");
      rec.sign = static_cast<int>(s);
    } else {
      c.fail("unknown key '" + key + "'");
    }
    if (!c.accept(';') && !c.eof()) c.fail("expected ';'");
  }
  if (!have_n) throw ParseError(c.line, c.col, "missing n=");
  if (!have_chords) throw ParseError(c.line, c.col, "missing chords=");
  const int N = 2 * rec.n;
  std::vector<int> m(N, -1);
  for (auto [a, b, l, co] : raw) {
    if (a < 0 || a >= N || b < 0 || b >= N)
      throw ParseError(l, co, "point out of range 0.." + std::to_string(N - 1));
    if (a == b) throw ParseError(l, co, "point " + std::to_string(a) + " paired with itself");
    if (m[a] != -1 || m[b] != -1)
      throw ParseError(l, co, "point " + std::to_string(m[a] != -1 ? a : b) + " paired twice");
    if (b == (a + 1) % N || a == (b + 1) % N)
      throw ParseError(l, co, "adjacent pairing at point " + std::to_string(std::min(a, b)));
    m[a] = b;
    m[b] = a;
  }
  if (static_cast<int>(raw.size()) != rec.n)
    throw ParseError(c.line, c.col,
                     "expected " + std::to_string(rec.n) + " chords, got " + std::to_string(raw.size()));
  rec.diagram = ChordDiagram(std::move(m));
  if (rec.mark && (*rec.mark < 0 || *rec.mark >= std::max(N, 1)))
    throw ParseError(c.line, c.col, "mark out of range");
  return rec;
}

ChordDiagram parse_diagram(std::string_view text) { return parse_record(text).diagram; }

nlohmann::json to_json(const ChordDiagram& d) {
  nlohmann::json ch = nlohmann::json::array();
  for (auto [a, b] : d.chords()) ch.push_back({a, b});
  return {{"n", d.n()}, {"chords", ch}};
}

ChordDiagram diagram_from_json(const nlohmann::json& j) {
  std::vector<Chord> ch;
  for (auto& c : j.at("chords")) ch.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
  return ChordDiagram::from_chords(j.at("n").get<int>(), ch);
}

std::string to_dot(const ChordDiagram& d) {
  std::ostringstream os;
  auto ch = d.chords();
  os << "graph crossings {\n";
  for (size_t i = 0; i < ch.size(); ++i)
    os << "  c" << i << " [label=\"(" << ch[i].first << "," << ch[i].second << ")\"];\n";
  for (size_t i = 0; i < ch.size(); ++i)
    for (size_t j = i + 1; j < ch.size(); ++j)
      if (crosses(d, ch[i], ch[j])) os << "  c" << i << " -- c" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fillsys

#include "fillsys/labelled.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fillsys {

LabelledDiagram LabelledDiagram::from_chord_labels(const ChordDiagram& d,
                                                   const std::vector<Word>& labels) {
  auto ch = d.chords();
  if (labels.size() != ch.size()) throw std::invalid_argument("one label per chord expected");
  LabelledDiagram L{d, std::vector<Word>(d.points())};
  for (size_t i = 0; i < ch.size(); ++i) {
    L.side[ch[i].first] = free_reduce(labels[i]);
    L.side[ch[i].second] = inverse(L.side[ch[i].first]);
  }
  return L;
}

Word LabelledDiagram::chord_label(int chord_id) const { return side[d.chords().at(chord_id).first]; }

std::vector<Word> LabelledDiagram::chord_labels() const {
  std::vector<Word> out;
  for (auto [a, b] : d.chords()) out.push_back(side[a]);
  return out;
}

Word cycle_word(const LabelledDiagram& L, const std::vector<int>& cycle) {
  Word w;
  for (int p : cycle) w.insert(w.end(), L.side[p].begin(), L.side[p].end());
  return free_reduce(w);
}

bool validate_labels(const LabelledDiagram& L, const SurfaceGroup& G) {
  if (static_cast<int>(L.side.size()) != L.d.points()) return false;
  for (int p = 0; p < L.d.points(); ++p)
    if (!concat(L.side[p], L.side[L.d.mate(p)]).empty()) return false;
  for (auto& c : cycles(L.d).cycles)
    if (!G.is_trivial(cycle_word(L, c))) return false;
  return true;
}

LabelledDiagram apply_to_diagram(const SurfaceAutomorphism& a, const LabelledDiagram& L,
                                 const SurfaceGroup& G) {
  LabelledDiagram out{L.d, std::vector<Word>(L.side.size())};
  for (auto [p, q] : L.d.chords()) {
    out.side[p] = G.reduce(a.apply(L.side[p]));
    out.side[q] = inverse(out.side[p]);
  }
  return out;
}

LabelledDiagram rotate(const LabelledDiagram& L, int r) {
  const int N = L.d.points();
  r = ((r % N) + N) % N;
  LabelledDiagram out{rotate(L.d, r), std::vector<Word>(N)};
  for (int i = 0; i < N; ++i) out.side[(i + r) % N] = L.side[i];
  return out;
}

LabelledDiagram delete_chord(const LabelledDiagram& L, int chord_id) {
  auto [a, b] = L.d.chords().at(chord_id);
  LabelledDiagram out{delete_chord(L.d, chord_id), {}};
  for (int p = 0; p < L.d.points(); ++p)
    if (p != a && p != b) out.side.push_back(L.side[p]);
  return out;
}

bool same_labels(const LabelledDiagram& a, const LabelledDiagram& b, const SurfaceGroup& G) {
  if (!(a.d == b.d)) return false;
  for (auto [p, q] : a.d.chords())
    if (!G.equal(a.side[p], b.side[p])) return false;
  return true;
}

std::optional<LabelledDiagram> insert_chord(const LabelledDiagram& L, int ga, int gb,
                                            const SurfaceGroup& G) {
  const int N = L.d.points();
  if (ga < 0 || gb >= N || ga >= gb) throw std::invalid_argument("gaps must satisfy 0 <= ga < gb < 2n");
  auto pos = [&](int p) { return p + (p > ga) + (p > gb); };
  const int M = N + 2;
  const int e1 = ga + 1, e2 = gb + 2;
  if (e2 - e1 == 1 || e2 - e1 == M - 1) return std::nullopt;
  std::vector<int> m(M);
  std::vector<Word> side(M);
  for (int p = 0; p < N; ++p) {
    m[pos(p)] = pos(L.d.mate(p));
    side[pos(p)] = L.side[p];
  }
  m[e1] = e2;
  m[e2] = e1;
  LabelledDiagram out{ChordDiagram(std::move(m)), std::move(side)};
  for (auto& c : cycles(out.d).cycles) {
    auto it = std::find(c.begin(), c.end(), e1);
    if (it == c.end()) continue;
    if (std::find(c.begin(), c.end(), e2) != c.end()) return std::nullopt;
    Word rest;
    for (auto j = it + 1; j != c.end(); ++j) rest.insert(rest.end(), out.side[*j].begin(), out.side[*j].end());
    for (auto j = c.begin(); j != it; ++j) rest.insert(rest.end(), out.side[*j].begin(), out.side[*j].end());
    out.side[e1] = G.reduce(inverse(free_reduce(rest)));
    out.side[e2] = inverse(out.side[e1]);
  }
  if (!validate_labels(out, G)) return std::nullopt;
  return out;
}

std::string to_text(const LabelledDiagram& L, int g) {
  std::ostringstream os;
  os << to_text(L.d) << '\n';
  auto labels = L.chord_labels();
  for (size_t i = 0; i < labels.size(); ++i) os << "label " << i << ": " << format_word(labels[i], g) << '\n';
  return os.str();
}

LabelledDiagram parse_labelled(std::string_view text, int g) {
  std::istringstream is{std::string(text)};
  std::string line, body;
  std::vector<std::pair<int, std::string>> raw;  // line number, rest
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line.compare(first, 5, "label") == 0) {
      raw.emplace_back(lineno, line.substr(first + 5));
      body += '\n';
    } else {
      body += line + '\n';
    }
  }
  ChordDiagram d = parse_diagram(body);
  std::vector<Word> labels(d.n());
  std::vector<char> have(d.n(), 0);
  for (auto& [ln, rest] : raw) {
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError(ln, 1, "expected 'label <chord-index>: <word>'");
    int idx;
    try {
      idx = std::stoi(rest.substr(0, colon));
    } catch (const std::exception&) {
      throw ParseError(ln, 7, "bad chord index");
    }
    if (idx < 0 || idx >= d.n()) throw ParseError(ln, 7, "chord index out of range");
    try {
      labels[idx] = parse_word(rest.substr(colon + 1), g);
    } catch (const std::invalid_argument& e) {
      throw ParseError(ln, static_cast<int>(colon) + 7, e.what());
    }
    have[idx] = 1;
  }
  for (int i = 0; i < d.n(); ++i)
    if (!have[i]) throw ParseError(lineno, 1, "missing label for chord " + std::to_string(i));
  return LabelledDiagram::from_chord_labels(d, labels);
}

}  // namespace fillsys

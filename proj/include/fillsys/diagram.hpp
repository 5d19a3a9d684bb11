#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fillsys {

using Chord = std::pair<int, int>;

// Perfect matching on 2n cyclically ordered points, no adjacent pair.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  explicit ChordDiagram(std::vector<int> matching);

  static ChordDiagram from_chords(int n, const std::vector<Chord>& chords);

  int n() const { return static_cast<int>(m_.size()) / 2; }
  int points() const { return static_cast<int>(m_.size()); }
  int mate(int p) const { return m_[p]; }
  const std::vector<int>& matching() const { return m_; }

  // chords sorted by least endpoint; this is the chord order seen from a
  // marker sitting just before point 0
  std::vector<Chord> chords() const;
  // index in chords() of the chord through p
  int chord_of(int p) const;

  auto operator<=>(const ChordDiagram&) const = default;

 private:
  std::vector<int> m_;
};

// empty string when m is a valid diagram
std::string validation_error(const std::vector<int>& m);

struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  int b() const { return static_cast<int>(cycles.size()); }
};

// cycles of f(i) = m[i] + 1 mod 2n, each started at its least point
CycleDecomposition cycles(const ChordDiagram& d);
int genus(const ChordDiagram& d);
bool is_k_filling(const ChordDiagram& d, int g, int k);

bool crosses(const ChordDiagram& d, Chord c1, Chord c2);
// chord indices (into chords()) per component, components ordered by least
// member
std::vector<std::vector<int>> components(const ChordDiagram& d);
bool is_connected(const ChordDiagram& d);
bool parallel_pair_exists(const ChordDiagram& d);

ChordDiagram rotate(const ChordDiagram& d, int r);
// sign of the chord permutation taking the chord order of d to that of
// rotate(d, r)
int rotation_perm_sign(const ChordDiagram& d, int r);
// least r with rotate(d, r) == canonical_form(d)
int canonical_rotation(const ChordDiagram& d);
ChordDiagram canonical_form(const ChordDiagram& d);

struct SymmetryReport {
  int order = 1;
  int perm_sign = 1;
};
SymmetryReport symmetry(const ChordDiagram& d);

// S_m on 2m points
ChordDiagram zigzag(int m);
// sub-diagram on the given chords, re-indexed in ambient cyclic order
std::vector<int> induced_matching(const ChordDiagram& d, const std::vector<int>& chord_ids);
ChordDiagram induced(const ChordDiagram& d, const std::vector<int>& chord_ids);
bool equivalent(const ChordDiagram& a, const ChordDiagram& b);
bool is_salient(const ChordDiagram& d);

// empty diagram when the deletion leaves an adjacent pair
ChordDiagram delete_chord(const ChordDiagram& d, int chord_id);

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error(what), line(line), column(column) {}
};

// n=<int>;chords=(a,b)(c,d)...[;mark=<int>;sign=<+-1>]
struct DiagramRecord {
  int n = 0;
  ChordDiagram diagram;
  std::optional<int> mark;
  int sign = 1;
};
std::string to_text(const ChordDiagram& d);
DiagramRecord parse_record(std::string_view text);
ChordDiagram parse_diagram(std::string_view text);

nlohmann::json to_json(const ChordDiagram& d);
ChordDiagram diagram_from_json(const nlohmann::json& j);
// crossing graph
std::string to_dot(const ChordDiagram& d);

}  // namespace fillsys

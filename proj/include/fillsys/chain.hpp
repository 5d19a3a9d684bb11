#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fillsys/diagram.hpp"
#include "fillsys/labelled.hpp"

namespace fillsys {

template <class K, class Cmp = std::less<K>>
class FormalSum {
 public:
  void add(const K& k, long c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }
  FormalSum& operator+=(const FormalSum& o) {
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FormalSum operator-() const {
    FormalSum r;
    for (auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<K, long, Cmp>& terms() const { return terms_; }
  long coefficient(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }
  bool operator==(const FormalSum&) const = default;

 private:
  std::map<K, long, Cmp> terms_;
};

// The marker sits just before point 0, so the chord order is the order of
// least endpoints.
struct OrientedSystem {
  ChordDiagram d;
  int sign = 1;

  // rotate the marker to point 0; the induced chord order needs no sign
  static OrientedSystem from_marker(const ChordDiagram& d, int mark, int sign);
};

struct LabelledOriented {
  LabelledDiagram L;
  int sign = 1;
};

// signed faces (-1)^i (x minus chord i), non-filling faces dropped
std::vector<OrientedSystem> boundary_terms(const OrientedSystem& x, int g, int k);
std::vector<LabelledOriented> boundary_terms(const LabelledOriented& x, int g, int k);

// keys are matchings with the marker at 0, no rotation quotient
using PositionedSum = FormalSum<std::vector<int>>;
PositionedSum boundary_positioned(const PositionedSum& x, int g, int k);

// (canonical diagram, sign of the rotation's chord permutation)
std::pair<ChordDiagram, int> canonical_oriented(const ChordDiagram& d);
// boundary with terms identified up to rotation; a system with a rotation
// symmetry of sign -1 is its own negative and keeps its coefficient mod 2
PositionedSum boundary(const OrientedSystem& x, int g, int k);
PositionedSum boundary(const PositionedSum& x, int g, int k);

struct SquareReport {
  bool ok = true;
  std::string offending;  // text form of the first failing sample
};
SquareReport boundary_squared_zero(const std::vector<OrientedSystem>& samples, int g, int k);

// (order, perm_sign) when the rotation stabilizer is nontrivial
std::optional<std::pair<int, int>> stabilizer_relation(const ChordDiagram& d, int g);

// c with a = c * b up to rotation (labels via the word problem), else 0
int compare_oriented(const LabelledOriented& a, const LabelledOriented& b, const SurfaceGroup& G);

// integer combination of labelled oriented systems merged by compare_oriented
class LabelledSum {
 public:
  void add(const LabelledOriented& x, long c, const SurfaceGroup& G);
  const std::vector<std::pair<LabelledOriented, long>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  std::vector<std::pair<LabelledOriented, long>> terms_;
};

}  // namespace fillsys

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fillsys/chain.hpp"
#include "fillsys/reduction.hpp"

namespace fillsys {

// S_2g labelled x_1..x_2g in chord order
LabelledDiagram identity_labelled(int g);
// genus-2 generators with their reference labels, and the genus-1 relation
LabelledDiagram phi_labelled(int i);
LabelledDiagram rho0_labelled();

// 0, 1, 2 for the orbits of phi_0, phi_1, phi_2; -1 otherwise
int generator_type(const ChordDiagram& d);

// sum of coef * word [phi_type]
struct RelationTerm {
  long coef;
  std::string word;
  int type;
};

struct RelationHit {
  LabelledDiagram alpha;  // the 1-filling system realizing the relation
  int pivot = -1;         // term whose reference alpha was built on
  std::map<int, LabelledOriented> derived;
};

// 1-filling systems with connected boundary faces equal to
// g * sum coef_j word_j [ref_{type_j}] for some mapping class g, up to a
// global sign. Types missing from refs are solved for.
std::vector<RelationHit> realize_relation(const std::vector<RelationTerm>& rel,
                                          const std::map<int, LabelledOriented>& refs);

// group ring of the genus-2 mapping classes on free-reduced words
using GroupRingElement = std::map<mcg::MCWord, long>;
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a);
// products of parenthesized sums, e.g. "(1+S0^-1 R)" or "(1+X)T0^-1(1-T1^-1)"
GroupRingElement parse_group_ring(std::string_view s);
std::string format(const GroupRingElement& a);
// same image in the group ring of automorphisms of pi_1
bool equal_as_automorphisms(const GroupRingElement& a, const GroupRingElement& b);

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct PresentationReport {
  int g = 0;
  bool ok = false;
  std::vector<CheckLine> checks;
  std::vector<std::string> relations;  // the presentation that was confirmed
};
PresentationReport verify_presentation(int g);

}  // namespace fillsys

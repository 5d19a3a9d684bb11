#pragma once

#include <string>
#include <vector>

#include "fillsys/chain.hpp"
#include "fillsys/labelled.hpp"

namespace fillsys {

using IntMatrix = std::vector<std::vector<long>>;

// t_1 = (p, p+2), t_k = (p+2k-3, p+2k) for 1 < k < n, and t_n the chord at
// p+2n-3 leaving the segment [p, p+2n-2]; for n = 1 any chord at p
struct TailDescriptor {
  int start = -1;
  std::vector<int> chords;  // chord ids, t_1 first
  int length() const { return static_cast<int>(chords.size()); }
};

TailDescriptor tail_at(const ChordDiagram& d, int p);
// longest tail, least start unless prefer_last
TailDescriptor find_salient_tail(const ChordDiagram& d, int g, bool prefer_last = false);

struct Extension {
  LabelledDiagram Lc;
  int chord = -1;  // id of c in Lc
  TailDescriptor tail;
  int slot_a = -1, slot_b = -1;
};
Extension extend_tail(const LabelledDiagram& L, const TailDescriptor& tail, int g, const SurfaceGroup& G);

// separating chord c with components on both sides; nullopt if connected
struct ConnectionCertificate {
  LabelledDiagram Lc;
  int chord = -1;
  std::vector<LabelledOriented> boundary;
};
std::optional<ConnectionCertificate> connection_relation(const LabelledDiagram& L, int g,
                                                         const SurfaceGroup& G);
// every separating insertion, in slot order
std::vector<ConnectionCertificate> connection_relations(const LabelledDiagram& L, int g, const SurfaceGroup& G);

struct ReductionResult {
  LabelledSum terms;  // diagrams equal to S_2g exactly
  std::vector<std::string> steps;
  int max_rounds = 0;  // extensions along the deepest branch
};

struct ReduceOptions {
  bool trace = false;
  bool prefer_last_tail = false;
  bool memo = true;
};
ReductionResult reduce(const LabelledDiagram& L, int g, const SurfaceGroup& G, const ReduceOptions& opt = {});

// J[i][j] = 1 when chord i = (a,b), j = (c,d) of S_2g interleave as a < c < b < d
IntMatrix crossing_form(int g);
long determinant(IntMatrix M);
// exponent sums of the labels of t aligned to the chord order of S_2g
IntMatrix h1_matrix(const LabelledDiagram& t, int g);
// M^T J M = +-J
bool preserves_form(const IntMatrix& M, const IntMatrix& J);

// genus 1: (u, v) |-> [v] - [u] on slopes up to sign
bool modular_symbol_oracle(const LabelledDiagram& L, const ReductionResult& r);

}  // namespace fillsys

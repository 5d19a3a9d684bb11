#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fillsys/group.hpp"

namespace fillsys {

// images of x_1..x_2g
struct SurfaceAutomorphism {
  std::vector<Word> images;

  static SurfaceAutomorphism identity(int g);
  int genus() const { return static_cast<int>(images.size()) / 2; }
  Word apply(const Word& w) const;
};

// (a*b)(w) = a(b(w)); images Dehn-reduced
SurfaceAutomorphism compose(const SurfaceAutomorphism& a, const SurfaceAutomorphism& b,
                            const SurfaceGroup& G);
bool is_identity(const SurfaceAutomorphism& a, const SurfaceGroup& G);
bool same_automorphism(const SurfaceAutomorphism& a, const SurfaceAutomorphism& b,
                       const SurfaceGroup& G);
// relator image is a conjugate of relator^{+-1}
bool is_automorphism_certificate(const SurfaceAutomorphism& a, const SurfaceGroup& G);

// exponent-sum matrix on H_1, column j = image of x_{j+1}
std::vector<std::vector<long>> h1_action(const SurfaceAutomorphism& a);

// Genus-2 mapping classes R, T_i, S_i, acting on pi_1 as substitutions.
// Words are written as products and act right to left.
namespace mcg {

struct Token {
  char kind;  // 'R', 'T', 'S'
  int index;  // 0..4, unused for R
  bool inverse;
  auto operator<=>(const Token&) const = default;
};
using MCWord = std::vector<Token>;

// "S0^-1 T0 S0 T2 R^-2", also lower-case letters as inverses (t1 = T1^-1)
MCWord parse(std::string_view s);
std::string format(const MCWord& w);
MCWord inverse(const MCWord& w);
MCWord free_reduce(const MCWord& w);

const SurfaceAutomorphism& generator(const Token& t);
SurfaceAutomorphism evaluate(const MCWord& w);
SurfaceAutomorphism evaluate(std::string_view s);

const SurfaceGroup& group();

}  // namespace mcg

}  // namespace fillsys

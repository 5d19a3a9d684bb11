#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fillsys {

// letters are +i / -i for generator x_i (1-based)
using Word = std::vector<int>;

Word inverse(const Word& w);
Word free_reduce(const Word& w);
Word concat(const Word& a, const Word& b);
// exponent sums, length 2g
std::vector<long> exponent_sums(const Word& w, int g);

// pi_1 of the closed genus-g surface, relator read off the zigzag S_2g
class SurfaceGroup {
 public:
  explicit SurfaceGroup(int g);

  int genus() const { return g_; }
  const Word& relator() const { return relator_; }

  // shortened representative: free reduction, then Dehn replacements
  // (genus >= 2) or sorted abelian form (genus 1)
  Word reduce(const Word& w) const;
  bool is_trivial(const Word& w) const;
  bool equal(const Word& a, const Word& b) const;
  // cyclic Dehn reduction lands on a rotation of relator^{+-1}
  bool conjugate_of_relator(const Word& w) const;

 private:
  bool dehn_step(Word& w) const;  // one replacement, false if none applies
  Word dehn_linear(Word w) const;

  int g_;
  Word relator_;
  std::vector<Word> sym_;  // rotations of relator and its inverse
};

// "x1 x2^-1 x1", genus-2 aliases x y z w, "1" for the empty word
Word parse_word(std::string_view s, int g);
std::string format_word(const Word& w, int g);

}  // namespace fillsys

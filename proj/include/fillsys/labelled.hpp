#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fillsys/automorphism.hpp"
#include "fillsys/diagram.hpp"
#include "fillsys/group.hpp"

namespace fillsys {

// side[p] is the word read along the chord from p to mate(p); the other
// side carries the inverse
struct LabelledDiagram {
  ChordDiagram d;
  std::vector<Word> side;

  // one word per chord in chords() order, read from the least endpoint
  static LabelledDiagram from_chord_labels(const ChordDiagram& d, const std::vector<Word>& labels);
  Word chord_label(int chord_id) const;
  std::vector<Word> chord_labels() const;
};

// ordered product of side labels along a cycle of d
Word cycle_word(const LabelledDiagram& L, const std::vector<int>& cycle);
bool validate_labels(const LabelledDiagram& L, const SurfaceGroup& G);
LabelledDiagram apply_to_diagram(const SurfaceAutomorphism& a, const LabelledDiagram& L,
                                 const SurfaceGroup& G);
LabelledDiagram rotate(const LabelledDiagram& L, int r);
LabelledDiagram delete_chord(const LabelledDiagram& L, int chord_id);
// true when the labels agree point by point via the word problem
bool same_labels(const LabelledDiagram& a, const LabelledDiagram& b, const SurfaceGroup& G);

// Insert a chord with endpoints in gaps ga, gb (gap i sits after point i),
// ga < gb. The new label closes the cycle it is inserted into; nullopt
// when the chord would be adjacent or the other new cycle fails.
std::optional<LabelledDiagram> insert_chord(const LabelledDiagram& L, int ga, int gb,
                                            const SurfaceGroup& G);

// diagram text followed by lines "label <chord-index>: <word>"
std::string to_text(const LabelledDiagram& L, int g);
LabelledDiagram parse_labelled(std::string_view text, int g);

}  // namespace fillsys

#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotcalc/presentation.hpp"

namespace knotcalc {

// Planar diagram of a knot. Each crossing lists the four incident edge
// labels counterclockwise starting at the incoming under-strand. Labels are
// normalized to 1..2n on construction; the 0-crossing unknot diagram has a
// single closed edge labeled 1.
class KnotDiagram {
 public:
  using Tuple = std::array<int, 4>;

  // Validates: every label appears exactly twice, the edges trace a single
  // closed component, and the under-strand convention is consistent.
  // One-crossing curls are accepted.
  static KnotDiagram from_tuples(std::vector<Tuple> tuples, std::string name = "");

  const std::vector<Tuple>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return arc_count_; }
  const std::string& name() const { return name_; }

  // +1 when the over-strand enters at position 3, -1 at position 1.
  const std::vector<int>& crossing_signs() const { return signs_; }

  // For each edge label (1-based), the slot (crossing, position) where the
  // edge points into the crossing (its head) and out of it (its tail).
  struct Slot {
    int crossing, position;
  };
  const std::vector<Slot>& edge_heads() const { return heads_; }
  const std::vector<Slot>& edge_tails() const { return tails_; }

 private:
  std::vector<Tuple> crossings_;
  int arc_count_ = 1;
  std::string name_;
  std::vector<int> signs_;
  std::vector<Slot> heads_, tails_;
};

// Grammar: whitespace-separated X(a,b,c,d) tokens, integers >= 1.
KnotDiagram parse_pd(const std::string& text, std::string name = "");

struct BraidWord {
  int strand_count = 1;
  std::vector<int> letters;  // letter i: crossing of strands |i|, |i|+1
};

// Grammar: braid(n; i1 i2 ...), signed nonzero integers.
BraidWord parse_braid_text(const std::string& text);

// Diagram of the braid closure; errors if the closure has more than one
// component.
KnotDiagram braid_closure(const BraidWord& braid, std::string name = "");
KnotDiagram parse_braid(const std::string& text, std::string name = "");

// One generator per over-arc, one conjugation relator per crossing:
// sign +1 gives o a o^-1 c^-1, sign -1 gives o^-1 a o c^-1, where a and c
// are the incoming and outgoing under-arcs and o the over-arc.
GroupPresentation wirtinger_presentation(const KnotDiagram& d);

}  // namespace knotcalc

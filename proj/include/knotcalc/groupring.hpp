#pragma once

#include <map>

#include "knotcalc/laurent.hpp"
#include "knotcalc/word.hpp"

namespace knotcalc {

// Element of the integral group ring Z[F] of a free group: finite formal sum
// of reduced words with nonzero integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement from_word(const Word& w) { return GroupRingElement(w, 1); }
  GroupRingElement(const Word& w, Int c);

  const std::map<Word, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupRingElement operator+(const GroupRingElement&) const;
  GroupRingElement operator-(const GroupRingElement&) const;
  GroupRingElement operator*(const GroupRingElement&) const;  // convolution
  GroupRingElement operator-() const;

  bool operator==(const GroupRingElement&) const = default;

 private:
  void add_term(const Word& w, const Int& c);
  std::map<Word, Int> terms_;
};

// Fox derivative d(w)/d(x_gen): dx/dx = 1, dy/dx = 0, d(x^-1)/dx = -x^-1,
// d(uv)/dx = du/dx + u dv/dx.
GroupRingElement fox_derivative(const Word& w, int gen);

}  // namespace knotcalc

#include "knotcalc/groupring.hpp"

namespace knotcalc {

GroupRingElement::GroupRingElement(const Word& w, Int c) { add_term(w, c); }

void GroupRingElement::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) r.add_term(word_product(w1, w2), c1 * c2);
  return r;
}

GroupRingElement fox_derivative(const Word& w, int gen) {
  // Single left-to-right pass with the product rule: the derivative picks up
  // prefix * d(letter)/d(gen) at each letter.
  GroupRingElement result;
  Word prefix;
  for (Letter x : w.letters()) {
    int g = x > 0 ? x : -x;
    if (g == gen) {
      if (x > 0) {
        result = result + GroupRingElement(prefix, 1);
      } else {
        Word shifted = word_product(prefix, Word::generator(g, -1));
        result = result - GroupRingElement(shifted, 1);
      }
    }
    prefix = word_product(prefix, Word::generator(g, x > 0 ? 1 : -1));
  }
  return result;
}

}  // namespace knotcalc

#include "knotcalc/freegroup.hpp"

#include <stdexcept>

#include "knotcalc/groupring.hpp"

namespace knotcalc {

MultiLaurent MultiLaurent::monomial(Int c, std::vector<int> exponents) {
  MultiLaurent m;
  m.add_term(exponents, c);
  return m;
}

void MultiLaurent::add_term(const std::vector<int>& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
  MultiLaurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
  MultiLaurent r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
  MultiLaurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e = e1;
      for (std::size_t i = 0; i < e.size() && i < e2.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

std::string MultiLaurent::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Int mag = c < 0 ? Int(-c) : c;
    std::string term;
    bool any_var = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any_var) term += "*";
      term += i < var_names.size() ? var_names[i] : "t" + std::to_string(i + 1);
      if (e[i] != 1) term += "^" + std::to_string(e[i]);
      any_var = true;
    }
    if (!any_var) {
      term = mag.str();
    } else if (mag != 1) {
      term = mag.str() + "*" + term;
    }
    out += term;
  }
  return out;
}

Word WitnessProduct::evaluate(const std::vector<Word>& y) const {
  Word acc;
  for (const Factor& f : factors) {
    if (f.base_index < 1 || f.base_index > static_cast<int>(y.size()))
      throw std::out_of_range("witness base index outside Y");
    Word base = y[static_cast<std::size_t>(f.base_index - 1)];
    if (f.sign < 0) base = word_inverse(base);
    acc = word_product(acc, conjugate_by(base, f.conjugator));
  }
  return acc;
}

LemmaWitness lemma_witness(const Word& a_next, const Word& b_next, const Word& c,
                           const Word& d) {
  const Word& a = a_next;
  const Word& b = b_next;
  // g = a^-1 c^-1 b^-1 d^-1 c (a d a^-1) b a, read off the displayed
  // rewriting of [c*a, d*b].
  Word inner = word_product(word_product(a, d), word_inverse(a));  // a d a^-1
  Word g = word_inverse(a);
  g = word_product(g, word_inverse(c));
  g = word_product(g, word_inverse(b));
  g = word_product(g, word_inverse(d));
  g = word_product(g, c);
  g = word_product(g, inner);
  g = word_product(g, b);
  g = word_product(g, a);

  // Decomposition: reading g as blocks u_0 y_1 u_1 ... y_4 u_4 with Y-blocks
  // y_1..y_4 = c^-1, d^-1, c, d, the product of conjugates v_i y_i v_i^-1
  // with v_i = u_0...u_(i-1) reproduces g exactly because the Y-killed tail
  // u_0 u_1 u_2 u_3 u_4 reduces to the identity.
  WitnessProduct wp;
  Word prefix;  // v = u_0 ... u_(i-1), the product of non-Y blocks so far
  auto add_factor = [&](int base, int sign) {
    wp.factors.push_back({word_inverse(prefix), sign, base});
  };
  // g token structure: a^-1 [c^-1] b^-1 [d^-1] [c] (a [d] a^-1) b a
  prefix = word_product(prefix, word_inverse(a));
  add_factor(1, -1);  // c^-1
  prefix = word_product(prefix, word_inverse(b));
  add_factor(2, -1);  // d^-1
  add_factor(1, +1);  // c
  prefix = word_product(prefix, a);
  add_factor(2, +1);  // d
  prefix = word_product(prefix, word_inverse(a));
  prefix = word_product(prefix, b);
  prefix = word_product(prefix, a);
  // prefix is now the Y-killed image of g, the identity by construction.

  return {g, wp};
}

std::vector<MultiLaurent> abelianized_fox_row(
    const Word& w, const std::vector<std::vector<int>>& generator_images) {
  int rank = static_cast<int>(generator_images.size());
  if (w.max_generator() > rank)
    throw std::invalid_argument("word mentions generator without an image");
  auto abelianize = [&](const Word& v) {
    std::size_t vars = generator_images.empty() ? 0 : generator_images[0].size();
    std::vector<int> e(vars, 0);
    for (Letter x : v.letters()) {
      const auto& img = generator_images[static_cast<std::size_t>(std::abs(x) - 1)];
      for (std::size_t i = 0; i < vars; ++i) e[i] += (x > 0 ? img[i] : -img[i]);
    }
    return e;
  };
  std::vector<MultiLaurent> row;
  row.reserve(static_cast<std::size_t>(rank));
  for (int j = 1; j <= rank; ++j) {
    GroupRingElement drv = fox_derivative(w, j);
    MultiLaurent entry;
    for (const auto& [word, coeff] : drv.terms())
      entry = entry + MultiLaurent::monomial(coeff, abelianize(word));
    row.push_back(entry);
  }
  return row;
}

std::string DerivedDepth::to_string() const {
  switch (kind) {
    case Kind::TrivialElement:
      return "trivial element";
    case Kind::Exact:
      return "depth " + std::to_string(depth);
    case Kind::AtLeast:
      return "at least " + std::to_string(depth);
  }
  return "";
}

DerivedDepth derived_depth(const Word& w, int rank, int max_depth) {
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  if (w.max_generator() > rank)
    throw std::invalid_argument("word mentions generator beyond the rank");
  if (w.empty()) return {DerivedDepth::Kind::TrivialElement, 0};
  for (int g = 1; g <= rank; ++g)
    if (w.exponent_sum(g) != 0) return {DerivedDepth::Kind::Exact, 0};
  // w lies in D^(1).
  if (max_depth == 1) return {DerivedDepth::Kind::AtLeast, 1};
  // Magnus criterion: w in D^(2) iff every Fox derivative dies in
  // Z[t_1^-+1, .., t_r^-+1].
  std::vector<std::vector<int>> images;
  for (int g = 0; g < rank; ++g) {
    std::vector<int> e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(g)] = 1;
    images.push_back(e);
  }
  auto row = abelianized_fox_row(w, images);
  for (const auto& entry : row)
    if (!entry.is_zero()) return {DerivedDepth::Kind::Exact, 1};
  return {DerivedDepth::Kind::AtLeast, 2};
}

}  // namespace knotcalc

#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "knotcalc/laurent.hpp"
#include "knotcalc/word.hpp"

namespace knotcalc {

// Monomial-map Laurent polynomial in commuting variables t_1..t_r.
class MultiLaurent {
 public:
  MultiLaurent() = default;
  static MultiLaurent monomial(Int c, std::vector<int> exponents);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }

  MultiLaurent operator+(const MultiLaurent&) const;
  MultiLaurent operator-(const MultiLaurent&) const;
  MultiLaurent operator*(const MultiLaurent&) const;

  bool operator==(const MultiLaurent&) const = default;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  void add_term(const std::vector<int>& e, const Int& c);
  std::map<std::vector<int>, Int> terms_;
};

// Membership certificate for the normal closure <<Y>>: a product of
// conjugates prod_j g_j^-1 y_{i_j}^{e_j} g_j.
struct WitnessProduct {
  struct Factor {
    Word conjugator;  // g_j
    int sign;         // e_j = +-1
    int base_index;   // i_j, 1-based index into Y
  };
  std::vector<Factor> factors;

  // prod_j g_j^-1 y^e g_j, freely reduced.
  Word evaluate(const std::vector<Word>& y) const;
};

struct LemmaWitness {
  Word witness;
  WitnessProduct decomposition;  // over Y = {c, d}, base 1 = c, base 2 = d
};

// The explicit element g with [c*a_next, d*b_next] = g * [a_next, b_next],
//   g = a'^-1 (c^-1 (b'^-1 (d^-1 c (a' d a'^-1)) b')) a',
// together with its decomposition as a product of conjugates of c^+-1 and
// d^+-1.
LemmaWitness lemma_witness(const Word& a_next, const Word& b_next, const Word& c,
                           const Word& d);

// Verdict of the finite-depth derived-series test.
struct DerivedDepth {
  enum class Kind { TrivialElement, Exact, AtLeast };
  Kind kind;
  int depth = 0;  // meaningful for Exact and AtLeast

  std::string to_string() const;
  bool operator==(const DerivedDepth&) const = default;
};

// Fox derivatives of w pushed through the abelianization that maps each free
// generator to the given monomial; entry j is d(w)/d(x_j).
// generator_images[j] are the exponent vectors of the images (one per
// generator 1..rank, each of length equal to the variable count).
std::vector<MultiLaurent> abelianized_fox_row(
    const Word& w, const std::vector<std::vector<int>>& generator_images);

// Derived depth of w in the free group of the given rank, certified exactly
// up to depth 2 via the Magnus criterion:
//   depth 0  <=> some exponent sum is nonzero,
//   depth 1  <=> exponent sums vanish but some abelianized Fox derivative
//                does not,
//   at least 2 otherwise (membership in D^(2) certified, deeper untested).
// max_depth caps the testing effort; values above 2 behave like 2.
DerivedDepth derived_depth(const Word& w, int rank, int max_depth = 2);

}  // namespace knotcalc

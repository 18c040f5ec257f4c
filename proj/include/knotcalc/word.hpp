#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace knotcalc {

// A letter is a signed generator index: +g for the generator, -g for its
// inverse, g >= 1.
using Letter = std::int32_t;

// Freely reduced word in a free group. The reduction invariant (no adjacent
// x x^-1 pair) is maintained by every constructor and operation.
class Word {
 public:
  Word() = default;

  // Reduces the given letter sequence.
  static Word from_letters(const std::vector<Letter>& letters);
  static Word generator(int index, int sign = +1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // Largest generator index appearing, 0 for the empty word.
  int max_generator() const;

  // Sum of exponents of generator g.
  long long exponent_sum(int g) const;

  std::set<int> generators_used() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  friend Word word_product(const Word&, const Word&);
  friend Word word_inverse(const Word&);
  friend Word kill_generators(const Word&, const std::set<int>&);
  std::vector<Letter> letters_;
};

Word word_product(const Word& a, const Word& b);
Word word_inverse(const Word& w);

// Paper convention: [a,b] = a^-1 b^-1 a b.
Word commutator(const Word& a, const Word& b);

// g^-1 w g, reduced.
Word conjugate_by(const Word& w, const Word& g);

// Image of w under the retraction killing the given generators.
Word kill_generators(const Word& w, const std::set<int>& killed);

// Text form: letters a..z, uppercase for inverses; also accepts x^-1, x^3,
// parentheses, and [u,v] commutator sugar. Generators map a->1 .. z->26.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

// Seedable generator of freely reduced words: uniform letters with
// immediate-cancellation rejection.
class WordSampler {
 public:
  WordSampler(std::uint64_t seed, int rank) : rng_(seed), rank_(rank) {}

  // Exactly `length` letters, freely reduced as generated.
  Word sample(std::size_t length);
  // Length drawn uniformly from [0, max_length].
  Word sample_up_to(std::size_t max_length);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int rank_;
};

}  // namespace knotcalc

#include "knotcalc/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace knotcalc {

namespace {

void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (Letter x : letters) {
    if (x == 0) throw std::invalid_argument("letter with generator index 0");
    push_reduced(w.letters_, x);
  }
  return w;
}

Word Word::generator(int index, int sign) {
  if (index < 1) throw std::invalid_argument("generator index must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  Word w;
  w.letters_.push_back(sign > 0 ? index : -index);
  return w;
}

int Word::max_generator() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, std::abs(x));
  return m;
}

long long Word::exponent_sum(int g) const {
  long long s = 0;
  for (Letter x : letters_) {
    if (x == g) ++s;
    if (x == -g) --s;
  }
  return s;
}

std::set<int> Word::generators_used() const {
  std::set<int> gens;
  for (Letter x : letters_) gens.insert(std::abs(x));
  return gens;
}

Word word_product(const Word& a, const Word& b) {
  Word r;
  r.letters_ = a.letters_;
  for (Letter x : b.letters_) push_reduced(r.letters_, x);
  return r;
}

Word word_inverse(const Word& w) {
  Word r;
  r.letters_.reserve(w.letters_.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
    r.letters_.push_back(-*it);
  return r;
}

Word commutator(const Word& a, const Word& b) {
  return word_product(word_product(word_inverse(a), word_inverse(b)),
                      word_product(a, b));
}

Word conjugate_by(const Word& w, const Word& g) {
  return word_product(word_product(word_inverse(g), w), g);
}

Word kill_generators(const Word& w, const std::set<int>& killed) {
  Word r;
  for (Letter x : w.letters_) {
    if (!killed.count(std::abs(x))) push_reduced(r.letters_, x);
  }
  return r;
}

namespace {

// Recursive-descent parser for the word syntax.
struct WordParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit WordParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("word syntax error at position " +
                                std::to_string(pos) + ": " + what);
  }

  Word parse_sequence(char terminator) {
    Word acc;
    while (!at_end() && peek() != terminator && peek() != ',') {
      acc = word_product(acc, parse_term());
    }
    return acc;
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip_ws();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      long long e = parse_int();
      Word powered;
      Word base = e < 0 ? word_inverse(atom) : atom;
      for (long long i = 0; i < std::llabs(e); ++i) powered = word_product(powered, base);
      return powered;
    }
    return atom;
  }

  Word parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '[') {
      ++pos;
      Word a = parse_sequence(']');
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos;
      Word b = parse_sequence(']');
      if (peek() != ']') fail("expected ']'");
      ++pos;
      return commutator(a, b);
    }
    if (c == '(') {
      ++pos;
      Word a = parse_sequence(')');
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return a;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos;
      int idx = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      int sign = std::isupper(static_cast<unsigned char>(c)) ? -1 : +1;
      return Word::generator(idx, sign);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

Word parse_word(const std::string& text) {
  WordParser p(text);
  Word w = p.parse_sequence('\0');
  if (!p.at_end()) p.fail("trailing input");
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  bool compact = w.max_generator() <= 26;
  for (Letter x : w.letters()) {
    int g = std::abs(x);
    if (compact) {
      char c = static_cast<char>('a' + g - 1);
      out += (x > 0) ? c : static_cast<char>(std::toupper(c));
    } else {
      if (!out.empty()) out += ' ';
      out += "g" + std::to_string(g);
      if (x < 0) out += "^-1";
    }
  }
  return out;
}

Word WordSampler::sample(std::size_t length) {
  std::uniform_int_distribution<int> gen(1, rank_);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> letters;
  letters.reserve(length);
  while (letters.size() < length) {
    Letter x = gen(rng_) * (sgn(rng_) ? 1 : -1);
    if (!letters.empty() && letters.back() == -x) continue;  // reject cancellation
    letters.push_back(x);
  }
  return Word::from_letters(letters);
}

Word WordSampler::sample_up_to(std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return sample(len(rng_));
}

}  // namespace knotcalc

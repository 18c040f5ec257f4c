#pragma once

#include <string>
#include <vector>

#include "knotcalc/word.hpp"

namespace knotcalc {

// Finite group presentation <x_1..x_n | r_1..r_m>.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<Word> relators;
  std::vector<std::string> generator_names;  // empty, or one per generator

  // Throws if a relator mentions a generator out of range or names are
  // inconsistent with generator_count.
  void validate() const;

  std::string generator_name(int index) const;  // 1-based
};

}  // namespace knotcalc

#pragma once

#include <vector>

#include "knotcalc/laurent.hpp"  // for Int

namespace knotcalc {

// Integer matrix in row-major order.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> entries;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c)) {}
  Int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  const Int& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

// Nonzero diagonal invariant factors d1 | d2 | ... of the Smith normal form,
// all positive. The cokernel of the matrix (as a map Z^cols <- Z^rows acting
// by row vectors) is Z^(cols - count) + sum Z/d_i.
std::vector<Int> smith_invariant_factors(IntMatrix m);

}  // namespace knotcalc

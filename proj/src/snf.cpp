#include "knotcalc/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace knotcalc {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

std::vector<Int> smith_invariant_factors(IntMatrix m) {
  std::vector<Int> factors;
  int top = 0;
  while (top < m.rows && top < m.cols) {
    // Find the nonzero entry of smallest magnitude in the working block.
    int pr = -1, pc = -1;
    Int best = 0;
    for (int i = top; i < m.rows; ++i)
      for (int j = top; j < m.cols; ++j) {
        const Int& v = m.at(i, j);
        if (v == 0) continue;
        if (pr < 0 || abs_int(v) < best) {
          pr = i;
          pc = j;
          best = abs_int(v);
        }
      }
    if (pr < 0) break;  // block is zero
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(top, j), m.at(pr, j));
    for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, top), m.at(i, pc));

    bool clean = true;
    for (int i = top + 1; i < m.rows; ++i) {
      Int q = m.at(i, top) / m.at(top, top);
      if (q != 0)
        for (int j = top; j < m.cols; ++j) m.at(i, j) -= q * m.at(top, j);
      if (m.at(i, top) != 0) clean = false;
    }
    for (int j = top + 1; j < m.cols; ++j) {
      Int q = m.at(top, j) / m.at(top, top);
      if (q != 0)
        for (int i = top; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, top);
      if (m.at(top, j) != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repeat on this block

    // Enforce divisibility of the remaining block by the pivot.
    bool divides_all = true;
    for (int i = top + 1; i < m.rows && divides_all; ++i)
      for (int j = top + 1; j < m.cols && divides_all; ++j)
        if (m.at(i, j) % m.at(top, top) != 0) {
          for (int jj = top; jj < m.cols; ++jj) m.at(top, jj) += m.at(i, jj);
          divides_all = false;
        }
    if (!divides_all) continue;

    factors.push_back(abs_int(m.at(top, top)));
    ++top;
  }
  return factors;
}

}  // namespace knotcalc

#pragma once

#include <vector>

#include "knotcalc/field.hpp"
#include "knotcalc/laurent.hpp"

namespace knotcalc {

// Dense matrix over Z[t, t^-1], row major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols);
  static PolyMatrix diagonal(const std::vector<LaurentPoly>& entries);
  static PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LaurentPoly& at(int r, int c);
  const LaurentPoly& at(int r, int c) const;

  PolyMatrix transposed() const;
  PolyMatrix without_column(int c) const;
  PolyMatrix without_row(int r) const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<LaurentPoly> entries_;
};

// Determinant of a square matrix: cofactor expansion for dimension <= 4,
// fraction-free elimination above that.
LaurentPoly poly_det(const PolyMatrix& m);

// All k x k minor determinants, rows and columns in lexicographic order of
// the index subsets. k = 0 yields {1}. Errors if k > min(rows, cols) or k < 0.
std::vector<LaurentPoly> minors(const PolyMatrix& m, int k);

// Presents an isomorphic module on fewer generators where possible: unit
// pivots (+-t^k entries) are eliminated and their row/column deleted; when no
// unit entry exists, tries to manufacture one through a Bezout column
// transform on a pair of entries with resultant +-1. Zero rows are dropped.
PolyMatrix smith_reduce_heuristic(const PolyMatrix& m);

// Rank of the entrywise specialization over the given finite field.
int rank_over_field(const PolyMatrix& m, const FieldSpec& spec);

}  // namespace knotcalc

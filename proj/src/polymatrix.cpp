#include "knotcalc/polymatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotcalc {

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

PolyMatrix PolyMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  int n = static_cast<int>(entries.size());
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

PolyMatrix PolyMatrix::block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

LaurentPoly& PolyMatrix::at(int r, int c) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
}

const LaurentPoly& PolyMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

PolyMatrix PolyMatrix::without_column(int c) const {
  if (c < 0 || c >= cols_) throw std::out_of_range("column index");
  PolyMatrix m(rows_, cols_ - 1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (j == c) continue;
      m.at(i, j < c ? j : j - 1) = at(i, j);
    }
  return m;
}

PolyMatrix PolyMatrix::without_row(int r) const {
  if (r < 0 || r >= rows_) throw std::out_of_range("row index");
  PolyMatrix m(rows_ - 1, cols_);
  for (int i = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (int j = 0; j < cols_; ++j) m.at(i < r ? i : i - 1, j) = at(i, j);
  }
  return m;
}

namespace {

LaurentPoly det_cofactor(const PolyMatrix& m) {
  int n = m.rows();
  if (n == 0) return LaurentPoly::one();
  if (n == 1) return m.at(0, 0);
  LaurentPoly acc;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    LaurentPoly sub = m.at(0, j) * det_cofactor(m.without_row(0).without_column(j));
    acc = (j % 2 == 0) ? acc + sub : acc - sub;
  }
  return acc;
}

// Bareiss elimination lifted to the polynomial ring; every division is exact.
LaurentPoly det_bareiss(PolyMatrix m) {
  int n = m.rows();
  int sign = 1;
  LaurentPoly prev = LaurentPoly::one();
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int s = k + 1;
      while (s < n && m.at(s, k).is_zero()) ++s;
      if (s == n) return LaurentPoly::zero();
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(s, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("Bareiss division not exact");
        m.at(i, j) = *q;
      }
      m.at(i, k) = LaurentPoly::zero();
    }
    prev = m.at(k, k);
  }
  LaurentPoly d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

void subsets(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

LaurentPoly poly_det(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() <= 4) return det_cofactor(m);
  return det_bareiss(m);
}

std::vector<LaurentPoly> minors(const PolyMatrix& m, int k) {
  if (k < 0 || k > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("minor size out of range");
  if (k == 0) return {LaurentPoly::one()};
  std::vector<std::vector<int>> row_sets, col_sets;
  subsets(m.rows(), k, row_sets);
  subsets(m.cols(), k, col_sets);
  std::vector<LaurentPoly> out;
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      PolyMatrix sub(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          sub.at(i, j) = m.at(rs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
      out.push_back(poly_det(sub));
    }
  }
  return out;
}

namespace {

// Inverse of a Laurent unit +-t^k.
LaurentPoly unit_inverse(const LaurentPoly& u) {
  Int c = u.trailing_coefficient();
  return LaurentPoly::monomial(c, -u.min_degree());  // c = +-1, c^-1 = c
}

// Eliminates the unit entry at (r, c), then deletes row r and column c.
PolyMatrix pivot_out(PolyMatrix m, int r, int c) {
  LaurentPoly inv = unit_inverse(m.at(r, c));
  for (int i = 0; i < m.rows(); ++i) {
    if (i == r || m.at(i, c).is_zero()) continue;
    LaurentPoly factor = m.at(i, c) * inv;
    for (int j = 0; j < m.cols(); ++j)
      m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
  }
  return m.without_row(r).without_column(c);
}

bool drop_zero_rows(PolyMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (int j = 0; j < m.cols() && zero; ++j) zero = m.at(i, j).is_zero();
    if (zero) {
      m = m.without_row(i);
      return true;
    }
  }
  return false;
}

// Looks for two entries f, g in one row (after an optional row merge) whose
// Bezout combination is a unit, and applies the invertible column transform
//   (col_j, col_k) <- (u*col_j + v*col_k, -g*col_j + f*col_k)
// which has determinant u*f + v*g = +-1 and creates a unit entry.
bool bezout_column_step(PolyMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int extra = -1; extra < m.rows(); ++extra) {
      if (extra == r) continue;
      PolyMatrix work = m;
      if (extra >= 0) {
        for (int j = 0; j < work.cols(); ++j)
          work.at(r, j) = work.at(r, j) + work.at(extra, j);
      }
      for (int j = 0; j < work.cols(); ++j) {
        const LaurentPoly& f = work.at(r, j);
        if (f.is_zero() || f.is_unit()) continue;
        for (int k = j + 1; k < work.cols(); ++k) {
          const LaurentPoly& g = work.at(r, k);
          if (g.is_zero() || g.is_unit()) continue;
          auto bez = bezout_unit_combination(f, g);
          if (!bez) continue;
          PolyMatrix next = work;
          for (int i = 0; i < next.rows(); ++i) {
            LaurentPoly cj = next.at(i, j), ck = next.at(i, k);
            next.at(i, j) = bez->u * cj + bez->v * ck;
            next.at(i, k) = f * ck - g * cj;
          }
          m = next;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

PolyMatrix smith_reduce_heuristic(const PolyMatrix& m) {
  PolyMatrix cur = m;
  while (true) {
    if (drop_zero_rows(cur)) continue;
    bool pivoted = false;
    for (int i = 0; i < cur.rows() && !pivoted; ++i) {
      for (int j = 0; j < cur.cols() && !pivoted; ++j) {
        if (cur.at(i, j).is_unit()) {
          cur = pivot_out(std::move(cur), i, j);
          pivoted = true;
        }
      }
    }
    if (pivoted) continue;
    if (cur.cols() > 1 && bezout_column_step(cur)) continue;
    break;
  }
  return cur;
}

int rank_over_field(const PolyMatrix& m, const FieldSpec& spec) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<FieldElement>> a(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    a[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)].push_back(specialize(m.at(i, j), spec));
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!spec.is_zero(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pivot)]);
    FieldElement inv = spec.inv(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]);
    for (int r = rank + 1; r < rows; ++r) {
      FieldElement factor = spec.mul(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], inv);
      if (spec.is_zero(factor)) continue;
      for (int j = c; j < cols; ++j) {
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = spec.sub(
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
            spec.mul(factor, a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace knotcalc

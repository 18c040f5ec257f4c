#include "knotcalc/fox.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "knotcalc/snf.hpp"

namespace knotcalc {

AlexanderData AlexanderData::from_presentation_matrix(PolyMatrix m) {
  AlexanderData a;
  a.full_matrix = m;
  a.deleted_column = -1;
  a.presentation_matrix = std::move(m);
  return a;
}

LaurentPoly abelianize_knot(const GroupRingElement& e) {
  LaurentPoly out;
  for (const auto& [w, c] : e.terms()) {
    long long total = 0;
    for (Letter x : w.letters()) total += (x > 0) ? 1 : -1;
    out += LaurentPoly::monomial(c, static_cast<int>(total));
  }
  return out;
}

namespace {

// The abelianization functional: the integer kernel vector of the relator
// exponent matrix, computed over the rationals and cleared to a primitive
// integer vector. Exists and is unique up to sign when the cokernel has
// free rank one.
std::vector<Int> kernel_functional(const IntMatrix& e) {
  using Rat = boost::multiprecision::cpp_rational;
  int rows = e.rows, cols = e.cols;
  std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows),
                                  std::vector<Rat>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rat(e.at(i, j));
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(a[static_cast<std::size_t>(rank)], a[static_cast<std::size_t>(pr)]);
    Rat inv = a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
    for (int j = c; j < cols; ++j) a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Rat f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank != cols - 1)
    throw std::invalid_argument("presentation abelianization does not have free rank one");
  // Free column = the one without a pivot; back-substitute a kernel vector.
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = 0;
  while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;
  std::vector<Rat> v(static_cast<std::size_t>(cols), Rat(0));
  v[static_cast<std::size_t>(free_col)] = 1;
  for (int r = 0; r < rank; ++r)
    v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] =
        -a[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)];
  // Clear denominators and divide by the content.
  Int lcm = 1;
  for (const Rat& x : v) {
    Int den = boost::multiprecision::denominator(x);
    Int g = boost::multiprecision::gcd(lcm, den);
    lcm = lcm / g * den;
  }
  std::vector<Int> u(static_cast<std::size_t>(cols));
  Int content = 0;
  for (int j = 0; j < cols; ++j) {
    Rat scaled = v[static_cast<std::size_t>(j)] * Rat(lcm);
    u[static_cast<std::size_t>(j)] = boost::multiprecision::numerator(scaled);
    content = boost::multiprecision::gcd(content, u[static_cast<std::size_t>(j)]);
  }
  if (content != 0)
    for (auto& x : u) x /= content;
  return u;
}

}  // namespace

AlexanderData alexander_matrix(const GroupPresentation& p, int deleted_column) {
  p.validate();
  int g = p.generator_count;
  int n = static_cast<int>(p.relators.size());
  if (g < 1) throw std::invalid_argument("presentation needs at least one generator");

  // Knot-group shape check: cokernel of the exponent matrix is Z and every
  // generator maps to the same class.
  IntMatrix e(n, g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < g; ++j)
      e.at(i, j) = Int(p.relators[static_cast<std::size_t>(i)].exponent_sum(j + 1));
  if (n == 0) {
    if (g != 1)
      throw std::invalid_argument(
          "relator-free presentation is a knot group only with one generator");
  } else {
    auto factors = smith_invariant_factors(e);
    if (static_cast<int>(factors.size()) != g - 1)
      throw std::invalid_argument("presentation abelianization is not infinite cyclic");
    for (const Int& f : factors)
      if (f != 1)
        throw std::invalid_argument("presentation abelianization has torsion");
    auto u = kernel_functional(e);
    for (const Int& x : u)
      if (x != u[0])
        throw std::invalid_argument(
            "generators are not conjugate-equivalent under abelianization");
    if (u[0] != 1 && u[0] != -1)
      throw std::invalid_argument("generator image does not generate the abelianization");
  }

  AlexanderData a;
  a.full_matrix = PolyMatrix(n, g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < g; ++j)
      a.full_matrix.at(i, j) =
          abelianize_knot(fox_derivative(p.relators[static_cast<std::size_t>(i)], j + 1));

  // Fundamental identity: each row sums to zero at t = 1.
  for (int i = 0; i < n; ++i) {
    Int s = 0;
    for (int j = 0; j < g; ++j) s += a.full_matrix.at(i, j).evaluate_at(1);
    if (s != 0) throw std::logic_error("Fox row identity violated");
  }

  a.deleted_column = (deleted_column < 0) ? g - 1 : deleted_column;
  if (a.deleted_column >= g) throw std::invalid_argument("deleted column out of range");
  a.presentation_matrix = a.full_matrix.without_column(a.deleted_column);
  return a;
}

LaurentPoly alexander_polynomial(const AlexanderData& a) {
  const PolyMatrix& m = a.presentation_matrix;
  if (m.cols() == 0) return LaurentPoly::one();
  if (m.rows() < m.cols())
    throw std::invalid_argument("presentation matrix has fewer rows than columns");
  return normalize_unit(poly_gcd(minors(m, m.cols())));
}

std::vector<LaurentPoly> elementary_ideal_generators(const AlexanderData& a, int k) {
  if (k < 0) throw std::invalid_argument("ideal index must be non-negative");
  const PolyMatrix& m = a.presentation_matrix;
  int size = m.cols() - k;
  if (size <= 0) return {LaurentPoly::one()};
  if (size > m.rows()) return {LaurentPoly::zero()};
  return minors(m, size);
}

}  // namespace knotcalc

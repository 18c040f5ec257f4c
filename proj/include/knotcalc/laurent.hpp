#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace knotcalc {

using Int = boost::multiprecision::cpp_int;

// Element of Z[t, t^-1] with exact integer coefficients. Canonical form:
// empty coefficient vector for zero, otherwise first and last entries nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly monomial(Int c, int degree);
  // coefficients[i] is the coefficient of t^(min_degree + i).
  static LaurentPoly from_coefficients(int min_degree, std::vector<Int> coefficients);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // Unit of the Laurent ring: a single term with coefficient +-1.
  bool is_unit() const;

  int min_degree() const { return min_deg_; }
  int max_degree() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coefficients() const { return coeffs_; }
  Int coefficient(int degree) const;
  Int leading_coefficient() const;
  Int trailing_coefficient() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly&) const;
  LaurentPoly operator-(const LaurentPoly&) const;
  LaurentPoly operator*(const LaurentPoly&) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly shifted(int k) const;  // multiply by t^k
  LaurentPoly mirrored() const;      // t -> t^-1

  Int evaluate_at(int v) const;  // exact; requires v = +-1 so t^-1 is integral

  bool operator==(const LaurentPoly&) const = default;

 private:
  void trim();
  int min_deg_ = 0;
  std::vector<Int> coeffs_;
};

// Multiplies by +-t^k so that min_degree = 0 and the constant term is
// positive. Zero maps to zero.
LaurentPoly normalize_unit(const LaurentPoly& f);

// Gcd in the UFD Z[t, t^-1], unit-normalized. Gcd with zero absorbs.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_gcd(const std::vector<LaurentPoly>& fs);  // errors on empty input

// Exact quotient if den divides num, nullopt otherwise. den must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Resultant of the Z[t]-polynomials obtained by shifting both arguments to
// minimum degree 0. Both must be nonzero.
Int resultant(const LaurentPoly& a, const LaurentPoly& b);

// If the pair generates the full ring via a +-1 resultant, returns (u, v)
// with u*a + v*b equal to that resultant.
struct BezoutPair {
  LaurentPoly u, v;
  Int value;  // u*a + v*b = value, value = +-1
};
std::optional<BezoutPair> bezout_unit_combination(const LaurentPoly& a, const LaurentPoly& b);

// Canonical text form, e.g. "t^2 - t + 1", "2 + t^-1". Highest degree first.
std::string to_string(const LaurentPoly& f);
LaurentPoly parse_laurent(const std::string& text);

}  // namespace knotcalc

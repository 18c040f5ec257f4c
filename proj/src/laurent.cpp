#include "knotcalc/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace knotcalc {

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    min_deg_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == 0) --tail;
  coeffs_.erase(coeffs_.begin() + tail, coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
  min_deg_ += static_cast<int>(lead);
}

LaurentPoly LaurentPoly::monomial(Int c, int degree) {
  LaurentPoly f;
  if (c != 0) {
    f.min_deg_ = degree;
    f.coeffs_.push_back(std::move(c));
  }
  return f;
}

LaurentPoly LaurentPoly::from_coefficients(int min_degree, std::vector<Int> coefficients) {
  LaurentPoly f;
  f.min_deg_ = min_degree;
  f.coeffs_ = std::move(coefficients);
  f.trim();
  return f;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && min_deg_ == 0 && coeffs_[0] == 1;
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

Int LaurentPoly::coefficient(int degree) const {
  int i = degree - min_deg_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

Int LaurentPoly::leading_coefficient() const {
  return coeffs_.empty() ? Int(0) : coeffs_.back();
}

Int LaurentPoly::trailing_coefficient() const {
  return coeffs_.empty() ? Int(0) : coeffs_.front();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f = *this;
  for (auto& c : f.coeffs_) c = -c;
  return f;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(min_deg_, o.min_deg_);
  int hi = std::max(max_degree(), o.max_degree());
  std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[min_deg_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    out[o.min_deg_ - lo + i] += o.coeffs_[i];
  return from_coefficients(lo, std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return from_coefficients(min_deg_ + o.min_deg_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly f = *this;
  if (!f.is_zero()) f.min_deg_ += k;
  return f;
}

LaurentPoly LaurentPoly::mirrored() const {
  if (is_zero()) return zero();
  std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
  return from_coefficients(-max_degree(), std::move(rev));
}

Int LaurentPoly::evaluate_at(int v) const {
  if (v != 1 && v != -1)
    throw std::invalid_argument("evaluate_at supports only t = +-1");
  Int s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int deg = min_deg_ + static_cast<int>(i);
    bool odd = (deg % 2) != 0;
    s += (v == -1 && odd) ? -coeffs_[i] : coeffs_[i];
  }
  return s;
}

LaurentPoly normalize_unit(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  LaurentPoly g = f.shifted(-f.min_degree());
  if (g.trailing_coefficient() < 0) g = -g;
  return g;
}

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = std::move(r);
  }
  return a;
}

Int content(const LaurentPoly& f) {
  Int c = 0;
  for (const auto& x : f.coefficients()) c = int_gcd(c, x);
  return c;
}

// Divides all coefficients by d (must divide exactly).
LaurentPoly divide_content(const LaurentPoly& f, const Int& d) {
  std::vector<Int> cs = f.coefficients();
  for (auto& c : cs) c /= d;
  return LaurentPoly::from_coefficients(f.min_degree(), std::move(cs));
}

int poly_degree(const LaurentPoly& f) { return f.max_degree(); }  // min_degree 0 assumed

// Pseudo-remainder of f by g in Z[t]; both with min_degree 0, g nonzero.
LaurentPoly pseudo_rem(LaurentPoly f, const LaurentPoly& g) {
  int dg = poly_degree(g);
  Int lg = g.leading_coefficient();
  while (!f.is_zero() && poly_degree(f) >= dg) {
    int shift = poly_degree(f) - dg;
    Int lf = f.leading_coefficient();
    // f <- lg*f - lf*t^shift*g kills the leading term.
    f = LaurentPoly::monomial(lg, 0) * f - LaurentPoly::monomial(lf, shift) * g;
  }
  return f;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  LaurentPoly f = a.shifted(-a.min_degree());
  LaurentPoly g = b.shifted(-b.min_degree());
  Int cf = content(f), cg = content(g);
  f = divide_content(f, cf);
  g = divide_content(g, cg);
  while (!g.is_zero()) {
    LaurentPoly r = pseudo_rem(f, g);
    if (!r.is_zero()) {
      r = r.shifted(-r.min_degree());
      r = divide_content(r, content(r));
    }
    f = std::move(g);
    g = std::move(r);
  }
  return normalize_unit(LaurentPoly::monomial(int_gcd(cf, cg), 0) * f);
}

LaurentPoly poly_gcd(const std::vector<LaurentPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("poly_gcd of empty sequence");
  LaurentPoly g = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) g = poly_gcd(g, fs[i]);
  return normalize_unit(g);
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (num.is_zero()) return LaurentPoly::zero();
  LaurentPoly f = num.shifted(-num.min_degree());
  LaurentPoly g = den.shifted(-den.min_degree());
  int dq = f.max_degree() - g.max_degree();
  if (dq < 0) return std::nullopt;
  std::vector<Int> q(static_cast<std::size_t>(dq) + 1);
  while (!f.is_zero() && f.max_degree() >= g.max_degree()) {
    Int lf = f.leading_coefficient();
    Int lg = g.leading_coefficient();
    if (lf % lg != 0) return std::nullopt;
    Int c = lf / lg;
    int shift = f.max_degree() - g.max_degree();
    q[static_cast<std::size_t>(shift)] = c;
    f = f - LaurentPoly::monomial(c, shift) * g;
  }
  if (!f.is_zero()) return std::nullopt;
  LaurentPoly quot = LaurentPoly::from_coefficients(0, std::move(q));
  return quot.shifted(num.min_degree() - den.min_degree());
}

namespace {

// Fraction-free determinant of an integer matrix (destroys its argument).
Int bareiss_det(std::vector<std::vector<Int>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Sylvester matrix of f, g as the matrix of (u, v) -> u f + v g in the
// monomial bases, rows indexed by t^0 .. t^(m+n-1).
std::vector<std::vector<Int>> sylvester(const LaurentPoly& f, const LaurentPoly& g) {
  int m = f.max_degree(), n = g.max_degree();
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Int>> s(size, std::vector<Int>(size));
  // Columns 0..n-1: u = t^j times f. Columns n..n+m-1: v = t^j times g.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(j)] = f.coefficient(i);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(n + j)] = g.coefficient(i);
  return s;
}

}  // namespace

Int resultant(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("resultant of zero polynomial");
  LaurentPoly f = a.shifted(-a.min_degree());
  LaurentPoly g = b.shifted(-b.min_degree());
  if (f.max_degree() == 0 && g.max_degree() == 0) return 1;  // empty Sylvester matrix
  auto s = sylvester(f, g);
  return bareiss_det(s);
}

std::optional<BezoutPair> bezout_unit_combination(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  LaurentPoly f = a.shifted(-a.min_degree());
  LaurentPoly g = b.shifted(-b.min_degree());
  int m = f.max_degree(), n = g.max_degree();
  Int res = resultant(f, g);
  if (res != 1 && res != -1) return std::nullopt;
  // Solve S x = res * e_0 by Cramer. det(S) = +-1 here, so the components
  // x_i = det(S with column i replaced by the rhs) / det(S) are integral.
  std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<Int> x(size);
  auto s = sylvester(f, g);
  auto sc = s;
  Int det_s = bareiss_det(sc);
  if (det_s != 1 && det_s != -1) return std::nullopt;
  for (std::size_t i = 0; i < size; ++i) {
    auto t = s;
    for (std::size_t r = 0; r < size; ++r) t[r][i] = (r == 0) ? res : Int(0);
    x[i] = bareiss_det(t) / det_s;
  }
  BezoutPair out;
  std::vector<Int> ucs(x.begin(), x.begin() + n);
  std::vector<Int> vcs(x.begin() + n, x.end());
  out.u = LaurentPoly::from_coefficients(0, std::move(ucs)).shifted(-a.min_degree());
  out.v = LaurentPoly::from_coefficients(0, std::move(vcs)).shifted(-b.min_degree());
  out.value = res;
  return out;
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int d = f.max_degree(); d >= f.min_degree(); --d) {
    Int c = f.coefficient(d);
    if (c == 0) continue;
    bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string term;
    if (d == 0) {
      term = mag.str();
    } else {
      if (mag != 1) term = mag.str() + "*";
      term += "t";
      if (d != 1) term += "^" + std::to_string(d);
    }
    out += term;
  }
  return out;
}

LaurentPoly parse_laurent(const std::string& text) {
  LaurentPoly acc;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("laurent syntax error at position " +
                                std::to_string(pos) + ": " + what);
  };
  skip_ws();
  if (pos >= text.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    // term := int | int '*'? t-part | t-part
    Int coeff = 1;
    bool saw_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      coeff = Int(text.substr(start, pos - start));
      saw_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    int degree = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      degree = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected exponent");
        degree = std::stoi(text.substr(start, pos - start));
      }
    } else if (!saw_coeff) {
      fail("expected term");
    }
    acc += LaurentPoly::monomial(sign * coeff, degree);
    first = false;
  }
  return acc;
}

}  // namespace knotcalc

#include "knotcalc/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotcalc {

namespace {

using Poly = std::vector<std::int64_t>;  // mod-p coefficients, low..high

std::int64_t mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  trim(out);
  return out;
}

// Remainder of a by b (b nonzero) over F_p.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  std::int64_t lead_inv = 0;
  {
    // Fermat inverse of the leading coefficient.
    std::int64_t l = b.back(), acc = 1, e = p - 2, base = l;
    while (e > 0) {
      if (e & 1) acc = mod(acc * base, p);
      base = mod(base * base, p);
      e >>= 1;
    }
    lead_inv = acc;
  }
  trim(a);
  while (deg(a) >= deg(b)) {
    std::int64_t c = mod(a.back() * lead_inv, p);
    int shift = deg(a) - deg(b);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = mod(a[i + shift] - c * b[i], p);
    trim(a);
  }
  return a;
}

Poly poly_gcd_fp(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool divides(const Poly& d, const Poly& f, std::int64_t p) {
  if (f.empty()) return true;
  return poly_rem(f, d, p).empty();
}

bool irreducible(const Poly& f, std::int64_t p) {
  int n = deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  // x^(p^i) mod f via repeated squaring of the Frobenius, testing
  // gcd(x^(p^i) - x, f) for i <= n/2.
  Poly x = {0, 1};
  Poly frob = x;
  for (int i = 1; i <= n / 2; ++i) {
    // frob <- frob^p mod f
    Poly acc = {1};
    Poly base = frob;
    std::int64_t e = p;
    while (e > 0) {
      if (e & 1) acc = poly_rem(poly_mul(acc, base, p), f, p);
      base = poly_rem(poly_mul(base, base, p), f, p);
      e >>= 1;
    }
    frob = acc;
    Poly diff = frob;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod(diff[1] - 1, p);
    trim(diff);
    if (!poly_gcd_fp(f, diff, p).empty() && deg(poly_gcd_fp(f, diff, p)) > 0) return false;
  }
  return true;
}

Poly make_monic(Poly f, std::int64_t p) {
  trim(f);
  if (f.empty()) return f;
  std::int64_t l = f.back(), acc = 1, e = p - 2, base = l;
  while (e > 0) {
    if (e & 1) acc = mod(acc * base, p);
    base = mod(base * base, p);
    e >>= 1;
  }
  for (auto& c : f) c = mod(c * acc, p);
  return f;
}

// Extended gcd over F_p[t]: returns (g, u, v) with u*a + v*b = g, g monic.
struct ExtGcd {
  Poly g, u, v;
};

Poly poly_add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] + b[i], p);
  trim(out);
  return out;
}

Poly poly_scale(const Poly& a, std::int64_t c, std::int64_t p) {
  Poly out = a;
  for (auto& x : out) x = mod(x * c, p);
  trim(out);
  return out;
}

// Quotient and remainder.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::int64_t p) {
  Poly q;
  trim(a);
  if (deg(a) >= deg(b)) q.resize(static_cast<std::size_t>(deg(a) - deg(b)) + 1, 0);
  std::int64_t l = b.back(), acc = 1, e = p - 2, base = l;
  while (e > 0) {
    if (e & 1) acc = mod(acc * base, p);
    base = mod(base * base, p);
    e >>= 1;
  }
  while (deg(a) >= deg(b)) {
    std::int64_t c = mod(a.back() * acc, p);
    int shift = deg(a) - deg(b);
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = mod(a[i + shift] - c * b[i], p);
    trim(a);
  }
  return {q, a};
}

ExtGcd ext_gcd(Poly a, Poly b, std::int64_t p) {
  Poly u0 = {1}, v0 = {}, u1 = {}, v1 = {1};
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b, p);
    Poly u2 = poly_add(u0, poly_scale(poly_mul(q, u1, p), p - 1, p), p);
    Poly v2 = poly_add(v0, poly_scale(poly_mul(q, v1, p), p - 1, p), p);
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  // Normalize so the gcd is monic.
  if (!a.empty() && a.back() != 1) {
    std::int64_t l = a.back(), acc = 1, e = p - 2, base = l;
    while (e > 0) {
      if (e & 1) acc = mod(acc * base, p);
      base = mod(base * base, p);
      e >>= 1;
    }
    a = poly_scale(a, acc, p);
    u0 = poly_scale(u0, acc, p);
    v0 = poly_scale(v0, acc, p);
  }
  return {a, u0, v0};
}

}  // namespace

FieldSpec::FieldSpec(std::int64_t p, std::vector<std::int64_t> modulus_coeffs)
    : p_(p), modulus_(std::move(modulus_coeffs)) {
  if (!is_prime(p_)) throw std::invalid_argument("FieldSpec: p must be prime");
  for (auto& c : modulus_) c = mod(c, p_);
  trim(modulus_);
  if (deg(modulus_) < 1) throw std::invalid_argument("FieldSpec: modulus must have degree >= 1");
  if (modulus_.back() != 1) throw std::invalid_argument("FieldSpec: modulus must be monic");
  if (modulus_[0] == 0) throw std::invalid_argument("FieldSpec: modulus(0) must be nonzero");
  if (!irreducible(modulus_, p_)) throw std::invalid_argument("FieldSpec: modulus must be irreducible");
  // Precompute t^-1 = -(modulus without constant term) / modulus(0).
  ExtGcd e = ext_gcd({0, 1}, modulus_, p_);
  t_inv_ = e.u;
  t_inv_.resize(static_cast<std::size_t>(degree()), 0);
}

FieldElement FieldSpec::zero() const { return FieldElement(static_cast<std::size_t>(degree()), 0); }

FieldElement FieldSpec::one() const {
  FieldElement e = zero();
  e[0] = 1;
  return e;
}

bool FieldSpec::is_zero(const FieldElement& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(a[i] + b[i], p_);
  return out;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement out = zero();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mod(a[i] - b[i], p_);
  return out;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  Poly prod = poly_mul(a, b, p_);
  Poly red = poly_rem(prod, modulus_, p_);
  red.resize(static_cast<std::size_t>(degree()), 0);
  return red;
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
  if (is_zero(a)) throw std::invalid_argument("FieldSpec: inverse of zero");
  Poly ac = a;
  trim(ac);
  ExtGcd e = ext_gcd(ac, modulus_, p_);
  Poly u = poly_rem(e.u, modulus_, p_);
  u.resize(static_cast<std::size_t>(degree()), 0);
  return u;
}

FieldElement FieldSpec::from_integer(const Int& n) const {
  FieldElement e = zero();
  Int r = n % p_;
  std::int64_t v = r.convert_to<std::int64_t>();
  e[0] = mod(v, p_);
  return e;
}

FieldElement FieldSpec::t_image() const {
  FieldElement e = zero();
  if (degree() == 1) {
    e[0] = mod(-modulus_[0], p_);
  } else {
    e[1] = 1;
  }
  return e;
}

FieldElement FieldSpec::t_inverse() const {
  FieldElement e = t_inv_;
  e.resize(static_cast<std::size_t>(degree()), 0);
  return e;
}

std::string FieldSpec::describe() const {
  std::string s = "(" + std::to_string(p_) + ", ";
  bool first = true;
  for (int d = deg(modulus_); d >= 0; --d) {
    std::int64_t c = modulus_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (!first) s += " + ";
    if (d == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (d == 1) ? "t" : "t^" + std::to_string(d);
    }
    first = false;
  }
  return s + ")";
}

FieldElement specialize(const LaurentPoly& f, const FieldSpec& spec) {
  if (f.is_zero()) return spec.zero();
  // Horner on the shifted polynomial, then multiply by t^min_degree.
  FieldElement acc = spec.zero();
  FieldElement t = spec.t_image();
  const auto& cs = f.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    acc = spec.mul(acc, t);
    acc = spec.add(acc, spec.from_integer(*it));
  }
  int k = f.min_degree();
  FieldElement shift = k >= 0 ? t : spec.t_inverse();
  for (int i = 0; i < std::abs(k); ++i) acc = spec.mul(acc, shift);
  return acc;
}

std::vector<FieldSpec> default_battery(const LaurentPoly& delta,
                                       const std::vector<std::int64_t>& primes,
                                       int max_degree) {
  std::vector<FieldSpec> battery;
  if (delta.is_zero()) return battery;
  for (std::int64_t p : primes) {
    // delta mod p as an F_p polynomial (t-shifted; t is a unit).
    Poly f;
    f.reserve(delta.coefficients().size());
    for (const auto& c : delta.coefficients()) {
      Int r = c % p;
      f.push_back(mod(r.convert_to<std::int64_t>(), p));
    }
    trim(f);
    if (f.empty()) continue;  // p divides every coefficient
    // Strip factors of t (units of the Laurent ring).
    std::size_t low = 0;
    while (low < f.size() && f[low] == 0) ++low;
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
    if (deg(f) < 1) continue;
    f = make_monic(f, p);
    // Collect distinct irreducible divisors of degree <= max_degree by
    // trial division, smallest degree first.
    for (int d = 1; d <= std::min(max_degree, deg(f)); ++d) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
      c[static_cast<std::size_t>(d)] = 1;
      // Enumerate monic candidates with nonzero constant term.
      std::vector<std::int64_t> counter(static_cast<std::size_t>(d), 0);
      while (true) {
        for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = counter[static_cast<std::size_t>(i)];
        if (c[0] != 0 && divides(c, f, p) && irreducible(c, p)) {
          battery.emplace_back(p, c);
          // Remove repeated factors so later degrees see the cofactor.
          Poly g = f;
          while (divides(c, g, p)) g = poly_divmod(g, c, p).first;
          f = g;
          if (deg(f) < d) break;
        }
        int i = 0;
        while (i < d && ++counter[static_cast<std::size_t>(i)] == p) {
          counter[static_cast<std::size_t>(i)] = 0;
          ++i;
        }
        if (i == d) break;
      }
      if (deg(f) < 1) break;
    }
  }
  return battery;
}

std::vector<std::int64_t> default_battery_primes() { return {2, 3, 5, 7, 11, 13}; }

}  // namespace knotcalc

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotcalc/laurent.hpp"

namespace knotcalc {

// Element of F_p[t]/(modulus), stored as coefficients of degree
// 0 .. deg(modulus)-1, reduced mod p.
using FieldElement = std::vector<std::int64_t>;

// A maximal ideal (p, modulus(t)) of Z[t, t^-1]. modulus is monic and
// irreducible mod p with nonzero constant term, so t is invertible in the
// residue field.
class FieldSpec {
 public:
  // coefficients low..high; validates primality, monicity, irreducibility,
  // and modulus(0) != 0 mod p.
  FieldSpec(std::int64_t p, std::vector<std::int64_t> modulus_coeffs);

  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }

  FieldElement zero() const;
  FieldElement one() const;
  bool is_zero(const FieldElement& a) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // errors on zero
  FieldElement from_integer(const Int& n) const;

  // Residue class of t and its inverse.
  FieldElement t_image() const;
  FieldElement t_inverse() const;

  std::string describe() const;  // e.g. "(2, t^2 + t + 1)"

  bool operator==(const FieldSpec& o) const {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }

 private:
  std::int64_t p_;
  std::vector<std::int64_t> modulus_;
  FieldElement t_inv_;
};

// Image of f under Z[t, t^-1] -> F_p[t]/(modulus).
FieldElement specialize(const LaurentPoly& f, const FieldSpec& spec);

// All FieldSpecs (p, pi) with p in `primes` and pi an irreducible factor of
// delta mod p of degree <= max_degree (pi != t). These are the only maximal
// ideals that can contain an elementary ideal of a module with order
// polynomial delta.
std::vector<FieldSpec> default_battery(const LaurentPoly& delta,
                                       const std::vector<std::int64_t>& primes,
                                       int max_degree = 4);

std::vector<std::int64_t> default_battery_primes();

}  // namespace knotcalc

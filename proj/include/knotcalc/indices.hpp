#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcalc/field.hpp"
#include "knotcalc/fox.hpp"
#include "knotcalc/laurent.hpp"

namespace knotcalc {

// Certified status of "does this ideal equal the whole ring".
struct IdealStatus {
  enum class Verdict { Full, NotFull, Unknown };
  Verdict verdict = Verdict::Unknown;

  // Full: sum of multipliers[i] * gens[i] equals `unit`, a ring unit.
  std::vector<LaurentPoly> multipliers;
  LaurentPoly unit;

  // NotFull: a specialization under which every generator vanishes.
  std::optional<FieldSpec> certificate;
};

// Full if a generator is a unit or some pair admits a Bezout combination
// with resultant +-1; NotFull if a battery specialization kills every
// generator; Unknown otherwise. Certificates are re-verified before the
// status is returned.
IdealStatus ideal_full_status(const std::vector<LaurentPoly>& gens,
                              const std::vector<FieldSpec>& battery);

struct IndexBounds {
  int lower = 0;
  int upper = 0;
  bool tight() const { return lower == upper; }
  bool operator==(const IndexBounds&) const = default;
};

// Sentinel for "no finite upper bound derived".
inline constexpr int kNoUpperBound = 1 << 20;

struct RuleApplication {
  std::string rule;    // e.g. "Eq1.1", "Prop2.1(1)", "Cor1.2"
  std::string detail;  // e.g. "a_upper <= 2"
};

struct IndexReport {
  std::string name;
  LaurentPoly delta;
  IndexBounds m_bounds;
  IndexBounds a_bounds;
  // a-bounds before the fibered rule; used to tell which knots the fibered
  // corollary actually decided.
  IndexBounds a_bounds_prior;
  std::optional<bool> fibered;
  std::vector<RuleApplication> rules;
  std::optional<std::string> error;  // set when the pipeline failed on a record
};

// Bounds on the Nakanishi index from the elementary-ideal chain of the
// reduced presentation matrix (lower) and the reduced generator count
// (upper). The battery should contain the maximal-ideal candidates derived
// from the Alexander polynomial.
IndexBounds nakanishi_bounds(const AlexanderData& a, const std::vector<FieldSpec>& battery);

// Applies the bound chain: a >= max(m_lower, nontrivial), a <= u,
// a <= r - 1, a <= hint_upper, and for fibered knots a = m. Returns the
// bounds plus the trace of applied rules in a fixed order.
std::pair<IndexBounds, std::vector<RuleApplication>> mq_bounds(
    const IndexBounds& m, std::optional<bool> fibered, std::optional<int> u,
    std::optional<int> rank, bool nontrivial, std::optional<int> hint_upper);

// Same, but also reports the bounds before the fibered rule.
struct MqResult {
  IndexBounds a;
  IndexBounds a_prior;  // before Cor 1.2
  std::vector<RuleApplication> rules;
};
MqResult mq_bounds_traced(const IndexBounds& m, std::optional<bool> fibered,
                          std::optional<int> u, std::optional<int> rank, bool nontrivial,
                          std::optional<int> hint_upper);

// Block-diagonal module presentation of a connected sum.
AlexanderData connected_sum_matrix(const AlexanderData& a1, const AlexanderData& a2);

// (t^|p| + 1)/(t + 1) for odd p with |p| >= 3.
LaurentPoly torus_2p_alexander(int p);

// Classification of the connected sum of (2,p) and (2,q) torus knots.
IndexReport kpq_classify(int p, int q);

// Necessary fiberedness screen: both end coefficients of the normalized
// Alexander polynomial are +-1.
bool fibered_necessary(const LaurentPoly& delta);

}  // namespace knotcalc

#include "knotcalc/indices.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "knotcalc/notation.hpp"

namespace knotcalc {

namespace {

bool verify_full(const std::vector<LaurentPoly>& gens, const IdealStatus& st) {
  if (st.multipliers.size() != gens.size()) return false;
  LaurentPoly acc;
  for (std::size_t i = 0; i < gens.size(); ++i) acc += st.multipliers[i] * gens[i];
  return acc == st.unit && st.unit.is_unit();
}

bool verify_not_full(const std::vector<LaurentPoly>& gens, const FieldSpec& spec) {
  for (const auto& g : gens)
    if (!spec.is_zero(specialize(g, spec))) return false;
  return true;
}

}  // namespace

IdealStatus ideal_full_status(const std::vector<LaurentPoly>& gens,
                              const std::vector<FieldSpec>& battery) {
  std::vector<LaurentPoly> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);

  IdealStatus st;
  // Unit generator.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_unit()) {
      st.verdict = IdealStatus::Verdict::Full;
      st.multipliers.assign(gens.size(), LaurentPoly::zero());
      st.multipliers[i] = LaurentPoly::one();
      st.unit = gens[i];
      if (!verify_full(gens, st)) throw std::logic_error("unit certificate failed");
      return st;
    }
  }
  // The zero ideal is proper (certificate: any valid specialization).
  if (nonzero.empty()) {
    st.verdict = IdealStatus::Verdict::NotFull;
    st.certificate = battery.empty() ? FieldSpec(2, {1, 1}) : battery.front();
    return st;
  }
  // Battery specializations.
  for (const auto& spec : battery) {
    if (verify_not_full(gens, spec)) {
      st.verdict = IdealStatus::Verdict::NotFull;
      st.certificate = spec;
      return st;
    }
  }
  // Bezout pairs.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[j].is_zero()) continue;
      auto bez = bezout_unit_combination(gens[i], gens[j]);
      if (!bez) continue;
      st.verdict = IdealStatus::Verdict::Full;
      st.multipliers.assign(gens.size(), LaurentPoly::zero());
      st.multipliers[i] = bez->u;
      st.multipliers[j] = bez->v;
      st.unit = LaurentPoly::monomial(bez->value, 0);
      if (!verify_full(gens, st)) throw std::logic_error("Bezout certificate failed");
      return st;
    }
  }
  st.verdict = IdealStatus::Verdict::Unknown;
  return st;
}

IndexBounds nakanishi_bounds(const AlexanderData& a, const std::vector<FieldSpec>& battery) {
  // Elementary ideals are invariants of the module, so they may be read off
  // the reduced presentation; its column count is the upper bound.
  PolyMatrix reduced = smith_reduce_heuristic(a.presentation_matrix);
  AlexanderData rd = AlexanderData::from_presentation_matrix(reduced);
  int upper = reduced.cols();

  int lower = upper;
  for (int k = 0; k < upper; ++k) {
    IdealStatus st = ideal_full_status(elementary_ideal_generators(rd, k), battery);
    if (st.verdict == IdealStatus::Verdict::Full) {
      lower = k;
      break;
    }
    if (st.verdict == IdealStatus::Verdict::Unknown) {
      // Certified only up to the last NotFull level.
      lower = k;
      break;
    }
    // NotFull: E_k proper, so the module needs more than k generators.
  }
  if (lower > upper) throw std::logic_error("nakanishi lower bound exceeds upper bound");
  return {lower, upper};
}

MqResult mq_bounds_traced(const IndexBounds& m, std::optional<bool> fibered,
                          std::optional<int> u, std::optional<int> rank, bool nontrivial,
                          std::optional<int> hint_upper) {
  if (m.lower > m.upper) throw std::invalid_argument("inconsistent m bounds");
  if (nontrivial && u && *u < 1)
    throw std::invalid_argument("nontrivial knot with unknotting number < 1");

  // Rules are applied in the fixed order nontriviality, Eq1.1, Prop2.1(1),
  // Prop2.1(4), hint, Cor1.2; the trace records only the binding ones.
  MqResult out;
  auto note = [&](const std::string& rule, const std::string& detail) {
    out.rules.push_back({rule, detail});
  };
  int nt = nontrivial ? 1 : 0;
  int lower = std::max(nt, m.lower);
  if (nt > m.lower) {
    note("nontriviality", "a >= 1");
  } else if (m.lower > 0) {
    note("Eq1.1", "a >= m >= " + std::to_string(m.lower));
  }
  int upper = kNoUpperBound;
  if (u && *u < upper) {
    upper = *u;
    note("Prop2.1(1)", "a <= u = " + std::to_string(*u));
  }
  if (rank && *rank - 1 < upper) {
    upper = *rank - 1;
    note("Prop2.1(4)", "a <= r - 1 = " + std::to_string(*rank - 1));
  }
  if (hint_upper && *hint_upper < upper) {
    upper = *hint_upper;
    note("hint", "a <= " + std::to_string(*hint_upper));
  }
  out.a_prior = {lower, upper};
  if (lower > upper) throw std::invalid_argument("inconsistent index bounds from input data");
  if (fibered && *fibered) {
    int nl = std::max(lower, m.lower);
    int nu = std::min(upper, m.upper);
    if (nl != lower || nu != upper)
      note("Cor1.2", "fibered: a = m, so " + std::to_string(nl) + " <= a <= " +
                         std::to_string(nu));
    lower = nl;
    upper = nu;
  }
  if (lower > upper) throw std::invalid_argument("inconsistent index bounds from input data");
  out.a = {lower, upper};
  return out;
}

std::pair<IndexBounds, std::vector<RuleApplication>> mq_bounds(
    const IndexBounds& m, std::optional<bool> fibered, std::optional<int> u,
    std::optional<int> rank, bool nontrivial, std::optional<int> hint_upper) {
  MqResult r = mq_bounds_traced(m, fibered, u, rank, nontrivial, hint_upper);
  return {r.a, r.rules};
}

AlexanderData connected_sum_matrix(const AlexanderData& a1, const AlexanderData& a2) {
  return AlexanderData::from_presentation_matrix(
      PolyMatrix::block_diagonal(a1.presentation_matrix, a2.presentation_matrix));
}

LaurentPoly torus_2p_alexander(int p) {
  if (p % 2 == 0 || std::abs(p) < 3)
    throw std::invalid_argument("torus parameter must be odd with |p| >= 3");
  int n = std::abs(p);
  std::vector<Int> cs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cs[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 1 : -1;
  return LaurentPoly::from_coefficients(0, std::move(cs));
}

IndexReport kpq_classify(int p, int q) {
  // Build both torus-knot modules end to end from braid closures.
  auto torus_data = [](int r) {
    std::string letters;
    for (int i = 0; i < std::abs(r); ++i) letters += (r > 0 ? " 1" : " -1");
    KnotDiagram d = parse_braid("braid(2;" + letters + ")");
    return alexander_matrix(wirtinger_presentation(d));
  };
  AlexanderData sum = connected_sum_matrix(torus_data(p), torus_data(q));

  IndexReport rep;
  rep.name = "K(" + std::to_string(p) + "," + std::to_string(q) + ")";
  rep.delta = alexander_polynomial(sum);
  std::vector<FieldSpec> battery = default_battery(rep.delta, default_battery_primes());
  rep.m_bounds = nakanishi_bounds(sum, battery);
  rep.fibered = true;  // ingested fact: a connected sum of fibered knots is fibered
  MqResult mq = mq_bounds_traced(rep.m_bounds, rep.fibered, std::nullopt, std::nullopt,
                                 /*nontrivial=*/true, std::nullopt);
  rep.a_bounds = mq.a;
  rep.a_bounds_prior = mq.a_prior;
  rep.rules = std::move(mq.rules);
  rep.rules.push_back({"ingested", "fibered = true for connected sums of torus knots"});
  return rep;
}

bool fibered_necessary(const LaurentPoly& delta) {
  if (delta.is_zero()) return false;
  Int lead = delta.leading_coefficient();
  Int trail = delta.trailing_coefficient();
  auto pm1 = [](const Int& x) { return x == 1 || x == -1; };
  return pm1(lead) && pm1(trail);
}

}  // namespace knotcalc

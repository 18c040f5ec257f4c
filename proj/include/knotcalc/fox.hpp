#pragma once

#include <vector>

#include "knotcalc/groupring.hpp"
#include "knotcalc/polymatrix.hpp"
#include "knotcalc/presentation.hpp"

namespace knotcalc {

// Presentation data of the Alexander module H_1(N; Z[G/N]) for N = [G, G].
struct AlexanderData {
  // One row per relator, one column per generator; entries are abelianized
  // Fox derivatives. Empty (0 x 0) for synthetic module presentations.
  PolyMatrix full_matrix;
  // Column removed to form the presentation matrix; -1 when the data was
  // built directly from a module presentation.
  int deleted_column = -1;
  PolyMatrix presentation_matrix;

  static AlexanderData from_presentation_matrix(PolyMatrix m);
};

// Image under Z[F] -> Z[t, t^-1] sending every generator to t.
LaurentPoly abelianize_knot(const GroupRingElement& e);

// Builds the Alexander matrix of a knot-group presentation. Validates via
// integer Smith normal form that the abelianization is infinite cyclic with
// every generator mapping to the same class t; throws otherwise.
// deleted_column is 0-based; pass -1 for the default (last column).
AlexanderData alexander_matrix(const GroupPresentation& p, int deleted_column = -1);

// normalize_unit(gcd of maximal minors of the presentation matrix); 1 for
// the trivial module.
LaurentPoly alexander_polynomial(const AlexanderData& a);

// Generators of the elementary ideal E_k: all (g-k) x (g-k) minors of the
// presentation matrix where g is its column count. Returns {1} when
// g - k <= 0 and {0} when g - k exceeds the row count.
std::vector<LaurentPoly> elementary_ideal_generators(const AlexanderData& a, int k);

}  // namespace knotcalc

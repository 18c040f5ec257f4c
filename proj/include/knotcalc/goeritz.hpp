#pragma once

#include "knotcalc/laurent.hpp"  // for Int
#include "knotcalc/notation.hpp"

namespace knotcalc {

// Knot determinant |H_1| of the double branched cover, computed from the
// checkerboard coloring of the diagram via a Goeritz matrix. Deliberately
// shares no code with the Fox-calculus route, so it can serve as an
// independent cross-check of |Delta(-1)|.
Int knot_determinant(const KnotDiagram& d);

}  // namespace knotcalc

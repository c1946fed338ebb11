#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dwsolve/params.hpp"

namespace dwsolve::dw_lattice {

using bracket_algebra::cplx;

// Additive rapidities of the L x L lattice: x[i] horizontal (bottom to
// top), y[j] vertical (left to right).
struct Rapidities {
  std::vector<cplx> x, y;
  int L() const { return static_cast<int>(x.size()); }
};

// Transfer-matrix state budget: maximum admissible n^L.  Defaults to 1e6;
// override with the environment variable DWSOLVE_BUDGET.
double state_budget();

// Exact DW partition function by row-by-row transfer over all internal
// bond colorings.  Boundary: color 1 enters every row from the left and
// leaves every column at the top; color n leaves every row on the right
// and enters every column at the bottom.  Throws BudgetExceeded when
// n^L exceeds the budget.
cplx z_bruteforce(const Rapidities& rap, const ModelParams& p);

struct CornerReduction {
  cplx prefactor;
  Rapidities reduced;
};

// Specialization -x_L + y_1 + (n-2) = 0 forces the top-left vertex to c+
// and freezes the first column / top row into w3 vertices:
//   Z_L = prod_{i<L} w3(-x_i+y_1) * c+ * prod_{j>1} w3(-x_L+y_j) * Z_{L-1}
// with x_L and y_1 removed.  Returns the frozen prefactor and the reduced
// rapidity lists; PreconditionError when the specialization fails
// (tolerance 1e-9 * (1 + |x_L|)).
CornerReduction z_bruteforce_corner_left(const Rapidities& rap, const ModelParams& p);

// Specialization -x_L + y_L = 0 forces the top-right vertex to c+ and
// freezes the top row / last column into w1 vertices:
//   Z_L = prod_{j<L} w1(-x_L+y_j) * c+ * prod_{i<L} w1(-x_i+y_L) * Z_{L-1}
// with x_L and y_L removed.
CornerReduction z_bruteforce_corner_right(const Rapidities& rap, const ModelParams& p);

// Z as a function of t = X^{1/2}, the square root of the multiplicative
// variable of the selected horizontal rapidity (0-based index into x).
// Every vertex weight is evaluated in multiplicative notation with the
// branch of all half-integer powers fixed by t itself (selected line) and
// by e^{-i lambda x} / e^{-i lambda y} (other lines), then normalized by
// the common multiplicative/additive factor -4 U k^{n/2}.  At
// t = e^{-i lambda x_sel} the value equals z_bruteforce of the additive
// rapidities.
cplx z_multiplicative_slice(const Rapidities& rap, int which, cplx t, const ModelParams& p);

}  // namespace dwsolve::dw_lattice

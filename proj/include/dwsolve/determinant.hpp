#pragma once

#include <complex>
#include <vector>

#include "dwsolve/lattice.hpp"
#include "dwsolve/params.hpp"

namespace dwsolve::determinant_formula {

using bracket_algebra::cplx;
using dw_lattice::Rapidities;

// Numerator prefactor N = prod_{i,j} w1 w2 w3 (-x_i + y_j).
cplx prefactor_n(const Rapidities& rap, const ModelParams& p);

// Denominator D = prod_{i<j} w2 w3 (-x_i + x_j) * prod_{i<j} w2 w3 (y_j - y_i).
// Throws PoleError when any bracket factor vanishes (coinciding rapidities).
cplx prefactor_d(const Rapidities& rap, const ModelParams& p);

// The 2L x 2L block matrix, row-major.  Row pair (2i-1, 2i) belongs to x_i,
// column pair (2j-1, 2j) to y_j (1-based); the (i,j) block is
//   [ 1/w2(u_ij)  1/w1(u_ij) ]
//   [ 1/w3(u_ij)  1/w2(u_ij) ]      with u_ij = -x_i + y_j.
// Each reciprocal bracket factor is pole-guarded (tolerance
// 1e-12 * max(1, |lambda * arg|)).
std::vector<cplx> block_matrix(const Rapidities& rap, const ModelParams& p);

// Z via the determinant formula:
//   Z = eps^L * (N / D) * det M,   eps = [n-4]/[n-2] = +/-1.
// At a discrete coupling lambda = m*pi/(2(n-3)) this equals z_bruteforce;
// n = 3 needs no coupling restriction (eps = -1 identically).  For n >= 4
// at a non-discrete coupling the value is still computed but the identity
// is not expected to hold; if condition_warning is non-null it is set to
// true in that case (and to false otherwise).
cplx z_determinant(const Rapidities& rap, const ModelParams& p,
                   bool* condition_warning = nullptr);

enum class RowCoincidence { upper, lower };

// Row-proportionality of the block matrix under rapidity specialization
// (1-based indices i != j):
//   upper: at -x_i + x_j + (n-2) = 0, row(2i-1) = (-1)^m * row(2j)
//   lower: at -x_i + x_j + (n-4) = 0, row(2i)   = (-1)^m * row(2j-1)
// Returns the maximum entry deviation of the two rows relative to the
// largest entry magnitude.  Throws PreconditionError when the
// specialization is not met (tolerance 1e-9 * (1 + |x_i|)) or when n >= 4
// and the coupling is not discrete (the sign (-1)^m needs a discrete m;
// n = 3 uses m = 0).
double row_coincidence_check(const Rapidities& rap, const ModelParams& p,
                             int i, int j, RowCoincidence which);

}  // namespace dwsolve::determinant_formula

#pragma once

#include <complex>
#include <vector>

#include "dwsolve/weights.hpp"

namespace dwsolve::so_n_model {

// Dense n^2 x n^2 R-matrix of additive weights at rapidity difference u.
// Index convention: row = flattened out-pair (sigma-1)*n + (nu-1), column =
// flattened in-pair (rho-1)*n + (mu-1).  Entries violating color
// conservation are exactly zero.
std::vector<cplx> assemble_r_matrix(cplx u, const ModelParams& p);

// Max-norm of R12(u) R13(u+v) R23(v) - R23(v) R13(u+v) R12(u) on the
// n^3-dimensional triple space, normalized by the largest entry magnitude
// of the two products.  The products are evaluated by sparse application to
// basis vectors (the R-matrix has O(n^2) structural nonzeros).
double ybe_residual(cplx u, cplx v, const ModelParams& p);

// Same residual computed in the transposed index convention (row = in-pair,
// column = out-pair).  The Yang-Baxter property is convention-independent;
// this is the self-consistency cross-check.
double ybe_residual_transposed(cplx u, cplx v, const ModelParams& p);

}  // namespace dwsolve::so_n_model

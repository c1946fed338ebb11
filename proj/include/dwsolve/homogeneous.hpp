#pragma once

#include <complex>

#include "dwsolve/params.hpp"

namespace dwsolve::homogeneous_limit {

using bracket_algebra::cplx;

// All horizontal rapidities equal to x, all vertical equal to y.
struct HomogeneousInput {
  cplx x, y;
  int L = 1;
};

// Homogeneous limit of the determinant representation.  The 2L x 2L block
// matrix of reciprocal weights turns into a double Wronskian-type matrix of
// derivatives at u0 = -x + y:
//
//   M_hom[(i,a),(j,b)] = (-1)^i * T_ab^{(i+j)}(u0),   i, j in 0..L-1,
//
// with T_00 = T_11 = 1/w2, T_01 = 1/w1, T_10 = 1/w3 (derivatives computed
// through truncated Taylor jets of order 2L-2), and
//
//   Z = eps^L * N(u0)^{L^2} * det M_hom
//       / ( (lambda^2 [n-2][n-4])^{L(L-1)} * (prod_{i<L} i!)^4 ).
//
// When det M_hom is exactly zero the function returns 0 before forming the
// prefactor (whose [n-4] factor vanishes at n = 4, where the determinant
// vanishes identically at discrete couplings).  Throws PoleError when a
// weight factor vanishes at u0.
cplx z_homogeneous(const HomogeneousInput& in, const ModelParams& p);

// Independent cross-check: Richardson extrapolation of z_determinant along
// a resolving direction x_i = x + i*eps, y_j = y + 1.3*j*eps for
// eps in {1e-2, 5e-3, 2.5e-3}, extrapolated quadratically to eps = 0.
cplx richardson_determinant_reference(cplx x, cplx y, int L, const ModelParams& p);

}  // namespace dwsolve::homogeneous_limit

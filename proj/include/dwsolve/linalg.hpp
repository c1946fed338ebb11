#pragma once

#include <complex>
#include <vector>

namespace dwsolve::linalg {

using cplx = std::complex<double>;

// Determinant of a dense N x N complex matrix (row-major) by LU with
// partial pivoting.  An exactly zero pivot returns exactly 0.
//
// Divisions and multiplications take a real fast path when both imaginary
// parts are exactly zero.  Together with the sign symmetry of IEEE
// arithmetic this guarantees that a matrix whose rows occur in bitwise
// equal-or-negated pairs (the structure that appears at degenerate discrete
// couplings, where sin(2*lambda) = 0) eliminates to an exact zero row and
// yields determinant exactly 0, independent of entry magnitudes.
cplx det_lu(std::vector<cplx> a, int N);

}  // namespace dwsolve::linalg

#include "dwsolve/homogeneous.hpp"

#include <cmath>
#include <vector>

#include "dwsolve/bracket.hpp"
#include "dwsolve/determinant.hpp"
#include "dwsolve/errors.hpp"
#include "dwsolve/jet.hpp"
#include "dwsolve/linalg.hpp"

namespace dwsolve::homogeneous_limit {

using bracket_algebra::CrossingParameter;
using bracket_algebra::Jet;
using bracket_algebra::jet_bracket_shifted;

namespace {

cplx ipow(cplx base, int e) {
  cplx out(1.0);
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

Jet checked_jet(cplx u0, int shift, int d, const CrossingParameter& cp) {
  Jet j = jet_bracket_shifted(u0, shift, d, cp);
  double scale =
      std::max(1.0, std::abs(cp.lambda * (u0 + static_cast<double>(shift))));
  if (std::abs(j[0]) < 1e-12 * scale)
    throw PoleError("weight factor vanishes at the homogeneous point");
  return j;
}

}  // namespace

cplx z_homogeneous(const HomogeneousInput& in, const ModelParams& p) {
  const int L = in.L;
  if (L < 1) throw PreconditionError("z_homogeneous needs L >= 1");
  const int n = p.n;
  const auto& cp = p.cp;
  const cplx u0 = -in.x + in.y;
  const int d = 2 * L - 2;  // highest derivative order used is i + j = 2L-2

  const Jet b_nm2 = checked_jet(u0, n - 2, d, cp);
  const Jet b_2 = checked_jet(u0, 2, d, cp);
  const Jet b_0 = checked_jet(u0, 0, d, cp);
  const Jet b_nm4 = checked_jet(u0, n - 4, d, cp);

  const Jet t01 = (b_nm2 * b_2).reciprocal();   // 1/w1
  const Jet t00 = (b_nm2 * b_0).reciprocal();   // 1/w2 (= T_11)
  const Jet t10 = (b_nm4 * b_0).reciprocal();   // 1/w3

  const int N = 2 * L;
  std::vector<cplx> M(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < L; ++i) {
    const double rs = (i % 2 == 0) ? 1.0 : -1.0;  // (-1)^i
    for (int j = 0; j < L; ++j) {
      const int k = i + j;
      cplx* top = M.data() + static_cast<std::size_t>(2 * i) * N + 2 * j;
      top[0] = rs * t00.derivative(k);
      top[1] = rs * t01.derivative(k);
      top[N] = rs * t10.derivative(k);
      top[N + 1] = rs * t00.derivative(k);
    }
  }

  const cplx det = linalg::det_lu(std::move(M), N);
  if (det == cplx(0.0)) return cplx(0.0);

  // N(u0) = w1 w2 w3 at the homogeneous point.
  const cplx n0 = (b_nm2[0] * b_2[0]) * (b_nm2[0] * b_0[0]) * (b_nm4[0] * b_0[0]);
  const cplx lam2 = cplx(cp.lambda * cp.lambda);
  const cplx unit = lam2 * bracket_algebra::bracket_shifted(cplx(0.0), n - 2, cp) *
                    bracket_algebra::bracket_shifted(cplx(0.0), n - 4, cp);
  if (L > 1 && unit == cplx(0.0))
    throw PoleError("homogeneous prefactor singular: [n-2][n-4] vanishes");
  double factquad = 1.0;
  for (int i = 1; i < L; ++i) {
    double f = 1.0;
    for (int k = 2; k <= i; ++k) f *= k;
    factquad *= f * f * f * f;
  }
  const double e = (L % 2 == 0) ? 1.0 : p.eps_sign();
  return e * ipow(n0, L * L) * det / (ipow(unit, L * (L - 1)) * factquad);
}

cplx richardson_determinant_reference(cplx x, cplx y, int L, const ModelParams& p) {
  const double eps[3] = {1e-2, 5e-3, 2.5e-3};
  cplx v[3];
  for (int k = 0; k < 3; ++k) {
    dw_lattice::Rapidities rap;
    rap.x.resize(L);
    rap.y.resize(L);
    for (int i = 0; i < L; ++i) {
      rap.x[i] = x + static_cast<double>(i) * eps[k];
      rap.y[i] = y + 1.3 * static_cast<double>(i) * eps[k];
    }
    v[k] = determinant_formula::z_determinant(rap, p);
  }
  // Quadratic (three-point Lagrange) extrapolation to eps = 0.
  cplx out(0.0);
  for (int k = 0; k < 3; ++k) {
    double c = 1.0;
    for (int l = 0; l < 3; ++l)
      if (l != k) c *= (0.0 - eps[l]) / (eps[k] - eps[l]);
    out += c * v[k];
  }
  return out;
}

}  // namespace dwsolve::homogeneous_limit

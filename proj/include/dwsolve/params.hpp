#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <utility>

namespace dwsolve::bracket_algebra {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Crossing parameter lambda, optionally tagged as one of the discrete values
//
//     lambda = m * pi / (2 * (n - 3)),   n >= 4, m integer,
//
// at which the determinant representation of the DW partition function is
// valid.  When the discrete tag is present, trigonometric brackets with
// integer shifts are evaluated through an exact pi-rational phase split (see
// bracket_shifted), so that identities such as [u + 2(n-3)] = (-1)^m [u]
// hold bitwise instead of only up to round-off.  n = 3 needs no tag: the
// discrete condition degenerates to m = 0, which holds for every lambda.
struct CrossingParameter {
  double lambda = 0.0;
  // (m, n) with lambda == m*pi/(2*(n-3)); absent for a generic coupling.
  std::optional<std::pair<int, int>> discrete;

  static CrossingParameter continuous(double lambda) { return {lambda, std::nullopt}; }

  static CrossingParameter discrete_point(int n, int m) {
    CrossingParameter cp;
    cp.lambda = static_cast<double>(m) * kPi / (2.0 * (n - 3));
    cp.discrete = std::make_pair(m, n);
    return cp;
  }

  cplx k() const { return std::exp(cplx(0.0, -2.0 * lambda)); }
};

}  // namespace dwsolve::bracket_algebra

namespace dwsolve {

// Model parameters shared by every module: the rank n of so(n) and the
// crossing parameter.
struct ModelParams {
  int n = 4;
  bracket_algebra::CrossingParameter cp;

  static ModelParams discrete(int n, int m) {
    return {n, bracket_algebra::CrossingParameter::discrete_point(n, m)};
  }
  static ModelParams continuous(int n, double lambda) {
    return {n, bracket_algebra::CrossingParameter::continuous(lambda)};
  }

  bool is_discrete() const { return cp.discrete.has_value(); }
  // The integer m of the discrete condition; n = 3 counts as m = 0 because
  // 2*lambda*(n-3) = m*pi holds identically there.
  int discrete_m() const {
    if (n == 3) return 0;
    return cp.discrete ? cp.discrete->first : 0;
  }
  // Sign epsilon = (-1)^(m+1) relating the determinant expression to the
  // enumeration side (one factor per lattice row).  Equal to [n-4]/[n-2] at
  // the discrete coupling.  For generic lambda with n >= 4 the value is a
  // convention (the formula is not expected to reproduce Z there); we keep
  // the n = 3 compatible choice -1.
  double eps_sign() const {
    if (n == 3) return -1.0;
    if (!cp.discrete) return -1.0;
    return (cp.discrete->first % 2 == 0) ? -1.0 : 1.0;
  }
};

}  // namespace dwsolve

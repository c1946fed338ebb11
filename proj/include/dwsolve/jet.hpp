#pragma once

#include <complex>
#include <vector>

#include "dwsolve/params.hpp"

namespace dwsolve::bracket_algebra {

// Dense truncated Taylor series (jet) of fixed order d: coefficients
// c0..cd of an expansion around a common point.  Arithmetic is exact
// truncation of formal power-series arithmetic at order d.
class Jet {
 public:
  Jet() = default;
  explicit Jet(int order) : c_(static_cast<size_t>(order) + 1, cplx(0.0)) {}
  Jet(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const cplx& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  cplx& operator[](int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<cplx>& coeffs() const { return c_; }

  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;  // truncated convolution
  Jet operator*(cplx s) const;

  // Multiplicative inverse as a formal series; requires c0 != 0 (throws
  // PoleError otherwise).  Sign-symmetric: reciprocal(-j) == -reciprocal(j)
  // bitwise, which the degenerate-coupling determinant evaluations rely on.
  Jet reciprocal() const;

  // k-th derivative value at the expansion point: c_k * k!.
  cplx derivative(int k) const;

 private:
  std::vector<cplx> c_;
};

// Taylor coefficients of t -> sin(a*t + b) at t0, to order d:
// coefficient j = a^j * sin(a*t0 + b + j*pi/2) / j!.
Jet jet_sin_affine(cplx a, cplx b, cplx t0, int d);

// Jet of s -> [u0 + shift + s] = sin(lambda*(u0 + shift + s)) at s = 0, to
// order d, evaluated through the exact pi-rational phase split for discrete
// couplings (same guarantees as bracket_shifted, coefficient by
// coefficient).
Jet jet_bracket_shifted(cplx u0, int shift, int d, const CrossingParameter& cp);

}  // namespace dwsolve::bracket_algebra

#include "dwsolve/bracket.hpp"

#include <cmath>
#include <cstdlib>

#include "dwsolve/errors.hpp"

namespace dwsolve::bracket_algebra {

namespace {

// sin/cos of a complex argument with an exact real fast path: for real input
// the imaginary part of the result is exactly +0.0, so downstream products
// and reciprocals of real quantities stay exactly real.
cplx csin(cplx z) {
  if (z.imag() == 0.0) return {std::sin(z.real()), 0.0};
  return std::sin(z);
}
cplx ccos(cplx z) {
  if (z.imag() == 0.0) return {std::cos(z.real()), 0.0};
  return std::cos(z);
}

}  // namespace

void sincospi_rational(long long num, long long den, double& s, double& c) {
  if (den < 0) {
    den = -den;
    num = -num;
  }
  // Reduce q = num/den modulo 2 (the period of sin/cos in units of pi).
  long long r = num % (2 * den);
  if (r < 0) r += 2 * den;
  // Exact table on the half-integer lattice q in {0, 1/2, 1, 3/2} mod 2.
  if ((2 * r) % den == 0) {
    switch ((2 * r) / den) {  // = 2q mod 4
      case 0: s = 0.0; c = 1.0; return;
      case 1: s = 1.0; c = 0.0; return;
      case 2: s = 0.0; c = -1.0; return;
      default: s = -1.0; c = 0.0; return;
    }
  }
  // Generic rational: fold into [0, 1/2] before touching floating point so
  // the argument of std::sin stays small.
  long long quarter = r * 4;  // compare q against multiples of 1/2
  double q = static_cast<double>(r) / static_cast<double>(den);
  if (quarter < 2 * den) {  // q in (0, 1/2)
    s = std::sin(kPi * q);
    c = std::cos(kPi * q);
  } else if (quarter < 4 * den) {  // q in (1/2, 1)
    s = std::sin(kPi * (1.0 - q));
    c = -std::cos(kPi * (1.0 - q));
  } else if (quarter < 6 * den) {  // q in (1, 3/2)
    s = -std::sin(kPi * (q - 1.0));
    c = -std::cos(kPi * (q - 1.0));
  } else {  // q in (3/2, 2)
    s = -std::sin(kPi * (2.0 - q));
    c = std::cos(kPi * (2.0 - q));
  }
}

cplx bracket(cplx x, const CrossingParameter& cp) { return csin(cp.lambda * x); }

cplx bracket_shifted(cplx u, int shift, const CrossingParameter& cp) {
  if (!cp.discrete) return csin(cp.lambda * (u + static_cast<double>(shift)));
  const auto [m, n] = *cp.discrete;
  double s, c;
  sincospi_rational(static_cast<long long>(shift) * m, 2LL * (n - 3), s, c);
  // sin(lambda*u + pi*q) expanded; with c,s in {0,+/-1} the result is a
  // bitwise-exact multiple of sin(lambda*u) or cos(lambda*u).
  if (s == 0.0) return c * csin(cp.lambda * u);
  if (c == 0.0) return s * ccos(cp.lambda * u);
  return csin(cp.lambda * u) * c + ccos(cp.lambda * u) * s;
}

cplx angle_bracket(cplx x, const CrossingParameter& cp) {
  const cplx v = bracket(x, cp);
  const double scale = std::max(1.0, std::abs(cp.lambda * x));
  if (std::abs(v) < 1e-12 * scale)
    throw PoleError("angle_bracket: bracket zero at the evaluation point");
  if (v.imag() == 0.0) return {1.0 / v.real(), 0.0};
  return 1.0 / v;
}

cplx to_multiplicative(cplx x, const CrossingParameter& cp) {
  return std::exp(cplx(0.0, -2.0 * cp.lambda) * x);
}

cplx k_half_power(int half, const CrossingParameter& cp) {
  if (cp.discrete) {
    const auto [m, n] = *cp.discrete;
    // k^(half/2) = exp(-i*pi * half*m/(2*(n-3)))
    double s, c;
    sincospi_rational(static_cast<long long>(half) * m, 2LL * (n - 3), s, c);
    return {c, -s};
  }
  const double a = cp.lambda * static_cast<double>(half);
  return {std::cos(a), -std::sin(a)};
}

cplx phase(double g, const CrossingParameter& cp) {
  const double a = cp.lambda * g;
  return {std::cos(a), std::sin(a)};
}

}  // namespace dwsolve::bracket_algebra

#pragma once

#include <complex>

#include "dwsolve/params.hpp"

namespace dwsolve::bracket_algebra {

// sin(pi * q) and cos(pi * q) for the exact rational q = num/den.  Exact
// (+/-1, +/-0) whenever q is an integer or half-integer; best-effort double
// precision otherwise.  den must be nonzero.
void sincospi_rational(long long num, long long den, double& s, double& c);

// The trigonometric bracket [x] = sin(lambda * x).
cplx bracket(cplx x, const CrossingParameter& cp);

// [u + shift] for an integer shift.  For a discrete coupling the value is
// computed as sin(lambda*u)*cos(pi*q) + cos(lambda*u)*sin(pi*q) with the
// exact rational phase q = shift*m/(2*(n-3)).  Whenever q is an integer or
// half-integer the identity [u + shift] = +/-[u] or +/-cos(lambda*u) then
// holds bitwise, which the degenerate-coupling evaluations rely on.
cplx bracket_shifted(cplx u, int shift, const CrossingParameter& cp);

// <x> = 1/[x].  Throws PoleError when |[x]| < 1e-12 * max(1, |lambda*x|).
cplx angle_bracket(cplx x, const CrossingParameter& cp);

// Multiplicative variable X = k^x = exp(-2i*lambda*x).
cplx to_multiplicative(cplx x, const CrossingParameter& cp);

// k^(half/2) = exp(-i*lambda*half), i.e. k raised to the possibly
// half-integer power half/2, evaluated without branch ambiguity.  Uses the
// exact pi-rational path for discrete couplings.
cplx k_half_power(int half, const CrossingParameter& cp);

// exp(i*lambda*g) for a real g (phase factors of the weight table).
cplx phase(double g, const CrossingParameter& cp);

}  // namespace dwsolve::bracket_algebra

#include "dwsolve/weights.hpp"

#include <cmath>
#include <vector>

#include "dwsolve/bracket.hpp"
#include "dwsolve/errors.hpp"

namespace dwsolve::so_n_model {

namespace ba = bracket_algebra;

int conjugate(int n, int a) { return n + 1 - a; }

double bar(int n, int a) {
  const int ap = conjugate(n, a);
  if (a < ap) return a + 0.5;
  if (a == ap) return a;
  return a - 0.5;
}

double tilde(int n, int a) {
  const int ap = conjugate(n, a);
  if (a < ap) return +0.5;
  if (a == ap) return 0.0;
  return -0.5;
}

FamilyAssignment WeightTable::classify(const VertexState& s) const {
  const int n = p_.n;
  const auto [rho, sigma, mu, nu] = s;
  if (rho + mu != sigma + nu) return {};
  if (rho == sigma && mu == nu) {
    if (rho == mu) {
      if (rho == conjugate(n, rho)) return {Family::w4, rho, rho};
      return {Family::w1, rho, rho};
    }
    if (mu == conjugate(n, rho)) return {Family::w3, rho, mu};
    return {Family::w2, rho, mu};
  }
  if (rho != sigma && mu == conjugate(n, rho) && nu == conjugate(n, sigma)) {
    return {rho < sigma ? Family::w7 : Family::w8, rho, sigma};
  }
  if (rho != sigma && sigma == mu && nu == rho && sigma != conjugate(n, rho)) {
    return {rho < sigma ? Family::w5 : Family::w6, rho, sigma};
  }
  return {};
}

namespace {

using ba::cplx;

// exp(i * lambda * g * u) for real g and complex u.
cplx expi(double g, cplx u, const ba::CrossingParameter& cp) {
  const cplx a = cp.lambda * g * u;
  if (a.imag() == 0.0) return {std::cos(a.real()), std::sin(a.real())};
  return std::exp(cplx(0.0, 1.0) * a);
}

// 1 - k^c for an integer c, written as 2i*[c]*k^{c/2} so that it vanishes
// bitwise exactly when [c] does (degenerate discrete couplings).
cplx one_minus_kpow(int c, const ba::CrossingParameter& cp) {
  const cplx br = ba::bracket_shifted(cplx(0.0), c, cp);
  return cplx(0.0, 2.0) * br * ba::k_half_power(c, cp);
}

cplx ipow(cplx z, int e) {
  if (e < 0) return 1.0 / ipow(z, -e);
  cplx r(1.0);
  while (e-- > 0) r *= z;
  return r;
}

// U^(half/2) with a caller-fixed square root of U.
cplx upow_half(cplx U, cplx sqrtU, int half) {
  if (half % 2 == 0) return ipow(U, half / 2);
  const int whole = (half - (half > 0 ? 1 : -1)) / 2;
  return ipow(U, whole) * (half > 0 ? sqrtU : 1.0 / sqrtU);
}

int ibar2(int n, int a) { return static_cast<int>(std::lround(2.0 * bar(n, a))); }

}  // namespace

cplx WeightTable::additive(const VertexState& s, cplx u) const {
  const auto fa = classify(s);
  const int n = p_.n;
  const auto& cp = p_.cp;
  const auto B = [&](cplx arg, int shift) { return ba::bracket_shifted(arg, shift, cp); };
  switch (fa.family) {
    case Family::zero:
      return cplx(0.0);
    case Family::w1:
      return B(u, n - 2) * B(u, 2);
    case Family::w2:
      return B(u, n - 2) * B(u, 0);
    case Family::w3:
      return B(u, n - 4) * B(u, 0);
    case Family::w4:
      return B(u, n - 2) * B(u, 0) + B(cplx(0.0), 2) * B(cplx(0.0), n - 2);
    default:
      break;
  }
  const int a = fa.alpha, b = fa.beta;
  const double D = tilde(n, a) - tilde(n, b);
  const cplx two = B(cplx(0.0), 2);
  switch (fa.family) {
    case Family::w5:
      return B(u, n - 2) * two * expi(2.0 * D - 1.0, u, cp);
    case Family::w6:
      return B(u, n - 2) * two * expi(2.0 * D + 1.0, u, cp);
    case Family::w7: {
      const double g = (ibar2(n, b) - ibar2(n, a)) - (n - 2);
      cplx inner = -B(u, 0) * ba::phase(g, cp);
      if (a == conjugate(n, b)) inner += B(u, n - 2);
      return inner * two * expi(2.0 * D - 1.0, u, cp);
    }
    default: {  // w8; note the flipped sign of the (n-2) phase term
      const double g = (ibar2(n, b) - ibar2(n, a)) + (n - 2);
      cplx inner = -B(u, 0) * ba::phase(g, cp);
      if (a == conjugate(n, b)) inner += B(u, n - 2);
      return inner * two * expi(2.0 * D + 1.0, u, cp);
    }
  }
}

cplx WeightTable::multiplicative(const VertexState& s, cplx X, cplx Y) const {
  const cplx U = X / Y;
  return multiplicative_cfg(s, U, std::sqrt(U));
}

cplx WeightTable::multiplicative_cfg(const VertexState& s, cplx U, cplx sqrtU) const {
  const auto fa = classify(s);
  const int n = p_.n;
  const auto& cp = p_.cp;
  const auto kp = [&](int half) { return ba::k_half_power(half, cp); };
  const cplx k = kp(2);
  switch (fa.family) {
    case Family::zero:
      return cplx(0.0);
    case Family::w1:
      return (U - kp(2 * (n - 2))) * (U - kp(4));
    case Family::w2:
      return (U - kp(2 * (n - 2))) * (U - 1.0) * k;
    case Family::w3:
      return (U - kp(2 * (n - 4))) * (U - 1.0) * k * k;
    case Family::w4:
      return (U - kp(2 * (n - 2))) * (U - 1.0) * k +
             one_minus_kpow(n - 2, cp) * one_minus_kpow(2, cp) * U;
    default:
      break;
  }
  const int a = fa.alpha, b = fa.beta;
  const int D2 = static_cast<int>(std::lround(2.0 * (tilde(n, a) - tilde(n, b))));
  const cplx omk2 = one_minus_kpow(2, cp);
  switch (fa.family) {
    case Family::w5:
      return (U - kp(2 * (n - 2))) * omk2 * upow_half(U, sqrtU, D2);
    case Family::w6:
      return (U - kp(2 * (n - 2))) * omk2 * upow_half(U, sqrtU, D2 + 2);
    case Family::w7: {
      cplx inner = -(U - 1.0) * kp(ibar2(n, a) - ibar2(n, b) + 2 * (n - 2));
      if (a == conjugate(n, b)) inner += U - kp(2 * (n - 2));
      return inner * omk2 * upow_half(U, sqrtU, D2);
    }
    default: {  // w8; k-exponent bar(a)-bar(b), without the (n-2) offset
      cplx inner = -(U - 1.0) * kp(ibar2(n, a) - ibar2(n, b));
      if (a == conjugate(n, b)) inner += U - kp(2 * (n - 2));
      return inner * omk2 * upow_half(U, sqrtU, D2 + 2);
    }
  }
}

cplx WeightTable::c_plus() const {
  return ba::bracket_shifted(cplx(0.0), 2, p_.cp) *
         ba::bracket_shifted(cplx(0.0), p_.n - 2, p_.cp);
}

int weight_degree(Family family, int alpha, int beta, const ModelParams& p) {
  WeightTable wt(p);
  VertexState s{};
  const int ap = conjugate(p.n, alpha);
  const int bp = conjugate(p.n, beta);
  switch (family) {
    case Family::w1:
    case Family::w4: s = {alpha, alpha, alpha, alpha}; break;
    case Family::w2: s = {alpha, alpha, beta, beta}; break;
    case Family::w3: s = {alpha, alpha, ap, ap}; break;
    case Family::w5:
    case Family::w6: s = {alpha, beta, beta, alpha}; break;
    case Family::w7:
    case Family::w8: s = {alpha, beta, ap, bp}; break;
    default: throw PreconditionError("weight_degree: zero family");
  }
  if (wt.classify(s).family != family)
    throw PreconditionError("weight_degree: colors do not realize the requested family");

  // Sample on the unit circle in t = sqrt(U) and DFT; the weight is a
  // Laurent polynomial in t with exponents of one parity, so the span in U
  // is half the span in t.
  constexpr int S = 16;
  std::vector<cplx> f(S);
  for (int j = 0; j < S; ++j) {
    const double th = 2.0 * ba::kPi * j / S;
    const cplx t{std::cos(th), std::sin(th)};
    f[j] = wt.multiplicative_cfg(s, t * t, t);
  }
  std::vector<double> mag(S, 0.0);
  double maxmag = 0.0;
  for (int e = 0; e < S; ++e) {
    cplx acc(0.0);
    for (int j = 0; j < S; ++j) {
      const double th = -2.0 * ba::kPi * e * j / S;
      acc += f[j] * cplx(std::cos(th), std::sin(th));
    }
    mag[e] = std::abs(acc) / S;
    maxmag = std::max(maxmag, mag[e]);
  }
  if (maxmag == 0.0) return 0;
  int lo = S, hi = -S;
  for (int e = 0; e < S; ++e) {
    if (mag[e] < 1e-8 * maxmag) continue;
    const int ex = (e <= S / 2) ? e : e - S;  // representative in (-S/2, S/2]
    lo = std::min(lo, ex);
    hi = std::max(hi, ex);
  }
  return (hi - lo) / 2;
}

}  // namespace dwsolve::so_n_model

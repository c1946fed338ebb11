#include "dwsolve/jet.hpp"

#include <cmath>

#include "dwsolve/bracket.hpp"
#include "dwsolve/errors.hpp"

namespace dwsolve::bracket_algebra {

Jet Jet::operator+(const Jet& o) const {
  Jet r(order());
  for (int k = 0; k <= order(); ++k) r[k] = c_[k] + o[k];
  return r;
}

Jet Jet::operator-(const Jet& o) const {
  Jet r(order());
  for (int k = 0; k <= order(); ++k) r[k] = c_[k] - o[k];
  return r;
}

Jet Jet::operator*(const Jet& o) const {
  Jet r(order());
  for (int k = 0; k <= order(); ++k) {
    cplx acc(0.0);
    for (int j = 0; j <= k; ++j) acc += c_[j] * o[k - j];
    r[k] = acc;
  }
  return r;
}

Jet Jet::operator*(cplx s) const {
  Jet r(order());
  for (int k = 0; k <= order(); ++k) r[k] = c_[k] * s;
  return r;
}

Jet Jet::reciprocal() const {
  const cplx c0 = c_[0];
  if (std::abs(c0) == 0.0) throw PoleError("Jet::reciprocal: zero constant term");
  Jet r(order());
  r[0] = (c0.imag() == 0.0) ? cplx(1.0 / c0.real(), 0.0) : 1.0 / c0;
  for (int k = 1; k <= order(); ++k) {
    cplx acc(0.0);
    for (int j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
    r[k] = (c0.imag() == 0.0 && acc.imag() == 0.0) ? cplx(-acc.real() / c0.real(), 0.0)
                                                   : -acc / c0;
  }
  return r;
}

cplx Jet::derivative(int k) const {
  double fact = 1.0;
  for (int j = 2; j <= k; ++j) fact *= j;
  return c_[static_cast<size_t>(k)] * fact;
}

Jet jet_sin_affine(cplx a, cplx b, cplx t0, int d) {
  Jet r(d);
  cplx apow(1.0);
  double fact = 1.0;
  const cplx theta = a * t0 + b;
  for (int j = 0; j <= d; ++j) {
    if (j > 0) {
      apow *= a;
      fact *= j;
    }
    r[j] = apow * std::sin(theta + cplx(0.5 * kPi * j, 0.0)) / fact;
  }
  return r;
}

Jet jet_bracket_shifted(cplx u0, int shift, int d, const CrossingParameter& cp) {
  // Base sine/cosine of lambda*(u0 + shift), exact-split when discrete.
  const cplx s0 = bracket_shifted(u0, shift, cp);
  cplx c0;
  if (cp.discrete) {
    const auto [m, n] = *cp.discrete;
    double sp, cpv;
    sincospi_rational(static_cast<long long>(shift) * m, 2LL * (n - 3), sp, cpv);
    const cplx su = bracket_shifted(u0, 0, cp);
    const cplx cu = (u0.imag() == 0.0) ? cplx(std::cos(cp.lambda * u0.real()), 0.0)
                                       : std::cos(cp.lambda * u0);
    if (sp == 0.0) c0 = cpv * cu;
    else if (cpv == 0.0) c0 = -sp * su;
    else c0 = cu * cpv - su * sp;
  } else {
    const cplx arg = cp.lambda * (u0 + static_cast<double>(shift));
    c0 = (arg.imag() == 0.0) ? cplx(std::cos(arg.real()), 0.0) : std::cos(arg);
  }
  // Coefficient j = lambda^j / j! * (quarter-turn rotation of (s0, c0)).
  // The lambda^j/j! prefactors are computed identically for every shift, so
  // shifts related by an exact sign keep bitwise-negated jets.
  Jet r(d);
  double lampow_over_fact = 1.0;
  for (int j = 0; j <= d; ++j) {
    if (j > 0) lampow_over_fact *= cp.lambda / j;
    switch (j % 4) {
      case 0: r[j] = lampow_over_fact * s0; break;
      case 1: r[j] = lampow_over_fact * c0; break;
      case 2: r[j] = -lampow_over_fact * s0; break;
      default: r[j] = -lampow_over_fact * c0; break;
    }
  }
  return r;
}

}  // namespace dwsolve::bracket_algebra

#include "dwsolve/linalg.hpp"

#include <cmath>

namespace dwsolve::linalg {

namespace {

inline bool is_real(cplx z) { return z.imag() == 0.0; }

inline cplx cdiv(cplx a, cplx b) {
  if (is_real(a) && is_real(b)) return {a.real() / b.real(), 0.0};
  return a / b;
}

inline cplx cmul(cplx a, cplx b) {
  if (is_real(a)) return {a.real() * b.real(), a.real() * b.imag()};
  if (is_real(b)) return {a.real() * b.real(), a.imag() * b.real()};
  return a * b;
}

}  // namespace

cplx det_lu(std::vector<cplx> a, int N) {
  auto at = [&](int i, int j) -> cplx& { return a[static_cast<size_t>(i) * N + j]; };
  double sign = 1.0;
  cplx det(1.0);
  for (int col = 0; col < N; ++col) {
    int piv = col;
    double best = std::abs(at(col, col));
    for (int r = col + 1; r < N; ++r) {
      const double m = std::abs(at(r, col));
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (best == 0.0) return cplx(0.0);
    if (piv != col) {
      for (int j = col; j < N; ++j) std::swap(at(piv, j), at(col, j));
      sign = -sign;
    }
    const cplx p = at(col, col);
    det = cmul(det, p);
    for (int r = col + 1; r < N; ++r) {
      if (at(r, col) == cplx(0.0)) continue;
      const cplx f = cdiv(at(r, col), p);
      at(r, col) = cplx(0.0);
      for (int j = col + 1; j < N; ++j) at(r, j) -= cmul(f, at(col, j));
    }
  }
  return sign * det;
}

}  // namespace dwsolve::linalg

#include "dwsolve/determinant.hpp"

#include <algorithm>
#include <cmath>

#include "dwsolve/bracket.hpp"
#include "dwsolve/errors.hpp"
#include "dwsolve/linalg.hpp"

namespace dwsolve::determinant_formula {

using bracket_algebra::bracket_shifted;
using bracket_algebra::CrossingParameter;

namespace {

// Bracket factor [arg + shift] with a pole guard on the factor itself.
cplx checked_bracket(cplx arg, int shift, const CrossingParameter& cp) {
  cplx b = bracket_shifted(arg, shift, cp);
  double scale =
      std::max(1.0, std::abs(cp.lambda * (arg + static_cast<double>(shift))));
  if (std::abs(b) < 1e-12 * scale)
    throw PoleError("bracket factor vanishes at the evaluation point");
  return b;
}

// 1 / ([u+s1][u+s2]) with per-factor pole guards.  Real inputs stay exactly
// real (reciprocal fast path), which the exact-zero determinant evaluation
// at degenerate couplings relies on.
cplx recip_pair(cplx u, int s1, int s2, const CrossingParameter& cp) {
  cplx prod = checked_bracket(u, s1, cp) * checked_bracket(u, s2, cp);
  if (prod.imag() == 0.0) return {1.0 / prod.real(), 0.0};
  return 1.0 / prod;
}

void check_square(const Rapidities& rap) {
  if (rap.x.size() != rap.y.size())
    throw PreconditionError("rapidity lists x and y must have equal length");
}

}  // namespace

cplx prefactor_n(const Rapidities& rap, const ModelParams& p) {
  check_square(rap);
  const int L = rap.L();
  const int n = p.n;
  const auto& cp = p.cp;
  cplx out(1.0);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      cplx u = -rap.x[i] + rap.y[j];
      // w1 w2 w3 = [u+n-2][u+2] * [u+n-2][u] * [u+n-4][u]
      out *= bracket_shifted(u, n - 2, cp) * bracket_shifted(u, 2, cp);
      out *= bracket_shifted(u, n - 2, cp) * bracket_shifted(u, 0, cp);
      out *= bracket_shifted(u, n - 4, cp) * bracket_shifted(u, 0, cp);
    }
  return out;
}

cplx prefactor_d(const Rapidities& rap, const ModelParams& p) {
  check_square(rap);
  const int L = rap.L();
  const int n = p.n;
  const auto& cp = p.cp;
  cplx out(1.0);
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L; ++j) {
      cplx v = -rap.x[i] + rap.x[j];
      out *= checked_bracket(v, n - 2, cp) * checked_bracket(v, 0, cp);  // w2
      out *= checked_bracket(v, n - 4, cp) * checked_bracket(v, 0, cp);  // w3
      cplx w = rap.y[j] - rap.y[i];
      out *= checked_bracket(w, n - 2, cp) * checked_bracket(w, 0, cp);
      out *= checked_bracket(w, n - 4, cp) * checked_bracket(w, 0, cp);
    }
  return out;
}

std::vector<cplx> block_matrix(const Rapidities& rap, const ModelParams& p) {
  check_square(rap);
  const int L = rap.L();
  const int n = p.n;
  const auto& cp = p.cp;
  const int N = 2 * L;
  std::vector<cplx> M(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      cplx u = -rap.x[i] + rap.y[j];
      const cplx iw1 = recip_pair(u, n - 2, 2, cp);
      const cplx iw2 = recip_pair(u, n - 2, 0, cp);
      const cplx iw3 = recip_pair(u, n - 4, 0, cp);
      cplx* top = M.data() + static_cast<std::size_t>(2 * i) * N + 2 * j;
      top[0] = iw2;
      top[1] = iw1;
      top[N] = iw3;
      top[N + 1] = iw2;
    }
  return M;
}

cplx z_determinant(const Rapidities& rap, const ModelParams& p,
                   bool* condition_warning) {
  check_square(rap);
  const int L = rap.L();
  if (L < 1) throw PreconditionError("z_determinant needs L >= 1");
  if (condition_warning) *condition_warning = (p.n >= 4 && !p.is_discrete());

  cplx N = prefactor_n(rap, p);
  cplx D = prefactor_d(rap, p);
  cplx det = linalg::det_lu(block_matrix(rap, p), 2 * L);
  double e = (L % 2 == 0) ? 1.0 : p.eps_sign();  // eps^L with eps = +/-1
  return e * (N / D) * det;
}

double row_coincidence_check(const Rapidities& rap, const ModelParams& p,
                             int i, int j, RowCoincidence which) {
  check_square(rap);
  const int L = rap.L();
  if (i < 1 || i > L || j < 1 || j > L || i == j)
    throw PreconditionError("row_coincidence_check needs distinct 1-based i, j in 1..L");
  if (p.n >= 4 && !p.is_discrete())
    throw PreconditionError(
        "row coincidence requires a discrete coupling lambda = m*pi/(2(n-3)) for n >= 4");

  const int shift = (which == RowCoincidence::upper) ? p.n - 2 : p.n - 4;
  cplx expr = -rap.x[i - 1] + rap.x[j - 1] + cplx(static_cast<double>(shift));
  if (std::abs(expr) > 1e-9 * (1.0 + std::abs(rap.x[i - 1])))
    throw PreconditionError("row coincidence specialization not met");

  const auto M = block_matrix(rap, p);
  const int N = 2 * L;
  // 1-based matrix rows: upper compares 2i-1 with 2j, lower 2i with 2j-1.
  const int r1 = (which == RowCoincidence::upper) ? 2 * i - 2 : 2 * i - 1;
  const int r2 = (which == RowCoincidence::upper) ? 2 * j - 1 : 2 * j - 2;
  const double sign = (p.discrete_m() % 2 == 0) ? 1.0 : -1.0;  // (-1)^m

  double maxdiff = 0.0, maxmag = 0.0;
  for (int c = 0; c < N; ++c) {
    cplx a = M[static_cast<std::size_t>(r1) * N + c];
    cplx b = M[static_cast<std::size_t>(r2) * N + c];
    maxdiff = std::max(maxdiff, std::abs(a - sign * b));
    maxmag = std::max({maxmag, std::abs(a), std::abs(b)});
  }
  return maxdiff / std::max(maxmag, 1e-30);
}

}  // namespace dwsolve::determinant_formula

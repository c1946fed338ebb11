#include "dwsolve/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <utility>

#include "dwsolve/bracket.hpp"
#include "dwsolve/errors.hpp"
#include "dwsolve/weights.hpp"

namespace dwsolve::dw_lattice {

using so_n_model::VertexState;
using so_n_model::WeightTable;

double state_budget() {
  if (const char* env = std::getenv("DWSOLVE_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e6;
}

namespace {

struct Transition {
  int nu0, sigma0;  // 0-based out-colors
  cplx w;
};

// Row-by-row transfer.  State = the L vertical bond colors (digit j of a
// base-n integer is color-1 on column j).  Within a row the horizontal
// color h is threaded left to right alongside a mixed vertical state
// (columns < j updated, columns >= j still old).  weight_of(i, j, s) gives
// the vertex weight of state s at lattice site (row i, column j).
template <typename WeightFn>
cplx transfer(int L, int n, WeightFn&& weight_of) {
  if (L == 0) return cplx(1.0);
  double states_d = std::pow(static_cast<double>(n), L);
  if (states_d > state_budget())
    throw BudgetExceeded("state space n^L exceeds budget (see DWSOLVE_BUDGET)");
  const std::size_t S = static_cast<std::size_t>(states_d + 0.5);

  std::vector<std::size_t> pw(L);
  pw[0] = 1;
  for (int j = 1; j < L; ++j) pw[j] = pw[j - 1] * static_cast<std::size_t>(n);

  // Bottom boundary: color n enters every column.
  std::vector<cplx> amp(S, cplx(0.0));
  amp[S - 1] = cplx(1.0);

  std::vector<cplx> cur(S * static_cast<std::size_t>(n));
  std::vector<cplx> nxt(S * static_cast<std::size_t>(n));
  // Transitions of column j for in-pair (h0, mu0), flattened h0*n+mu0.
  std::vector<std::vector<Transition>> cell(static_cast<std::size_t>(n) *
                                            static_cast<std::size_t>(n));

  for (int i = 0; i < L; ++i) {
    // Left boundary: color 1 enters the row.
    std::fill(cur.begin(), cur.end(), cplx(0.0));
    for (std::size_t s = 0; s < S; ++s)
      if (amp[s] != cplx(0.0)) cur[s * n + 0] = amp[s];

    for (int j = 0; j < L; ++j) {
      for (auto& v : cell) v.clear();
      for (int rho0 = 0; rho0 < n; ++rho0)
        for (int mu0 = 0; mu0 < n; ++mu0)
          for (int nu0 = 0; nu0 < n; ++nu0) {
            int sigma0 = rho0 + mu0 - nu0;  // color conservation
            if (sigma0 < 0 || sigma0 >= n) continue;
            if (nu0 + sigma0 != mu0 + rho0)
              throw PreconditionError("vertex transition violates color conservation");
            cplx w = weight_of(i, j, VertexState{rho0 + 1, sigma0 + 1, mu0 + 1, nu0 + 1});
            if (w == cplx(0.0)) continue;
            cell[static_cast<std::size_t>(rho0) * n + mu0].push_back(
                Transition{nu0, sigma0, w});
          }

      std::fill(nxt.begin(), nxt.end(), cplx(0.0));
      for (std::size_t s = 0; s < S; ++s) {
        int mu0 = static_cast<int>((s / pw[j]) % static_cast<std::size_t>(n));
        for (int h0 = 0; h0 < n; ++h0) {
          cplx a = cur[s * n + h0];
          if (a == cplx(0.0)) continue;
          for (const Transition& t :
               cell[static_cast<std::size_t>(h0) * n + mu0]) {
            std::size_t s2 = static_cast<std::size_t>(
                static_cast<std::ptrdiff_t>(s) +
                static_cast<std::ptrdiff_t>(t.nu0 - mu0) *
                    static_cast<std::ptrdiff_t>(pw[j]));
            nxt[s2 * n + t.sigma0] += a * t.w;
          }
        }
      }
      cur.swap(nxt);
    }

    // Right boundary: color n leaves the row.
    for (std::size_t s = 0; s < S; ++s) amp[s] = cur[s * n + (n - 1)];
  }

  // Top boundary: color 1 leaves every column.
  return amp[0];
}

void check_square(const Rapidities& rap) {
  if (rap.x.size() != rap.y.size())
    throw PreconditionError("rapidity lists x and y must have equal length");
}

cplx family_weight(const WeightTable& table, so_n_model::Family f, cplx u) {
  const int n = table.params().n;
  VertexState s{};
  switch (f) {
    case so_n_model::Family::w1:
      s = VertexState{1, 1, 1, 1};
      break;
    case so_n_model::Family::w3:
      s = VertexState{1, 1, n, n};
      break;
    default:
      throw PreconditionError("family_weight: unsupported family");
  }
  return table.additive(s, u);
}

}  // namespace

cplx z_bruteforce(const Rapidities& rap, const ModelParams& p) {
  check_square(rap);
  WeightTable table(p);
  return transfer(rap.L(), p.n, [&](int i, int j, const VertexState& s) {
    return table.additive(s, -rap.x[i] + rap.y[j]);
  });
}

CornerReduction z_bruteforce_corner_left(const Rapidities& rap, const ModelParams& p) {
  check_square(rap);
  const int L = rap.L();
  if (L < 1) throw PreconditionError("corner reduction needs L >= 1");
  const int n = p.n;
  cplx expr = -rap.x[L - 1] + rap.y[0] + cplx(static_cast<double>(n - 2));
  if (std::abs(expr) > 1e-9 * (1.0 + std::abs(rap.x[L - 1])))
    throw PreconditionError("corner specialization -x_L + y_1 + (n-2) = 0 not met");

  WeightTable table(p);
  cplx pre = cplx(1.0);
  for (int i = 0; i + 1 < L; ++i)
    pre *= family_weight(table, so_n_model::Family::w3, -rap.x[i] + rap.y[0]);
  pre *= table.c_plus();
  for (int j = 1; j < L; ++j)
    pre *= family_weight(table, so_n_model::Family::w3, -rap.x[L - 1] + rap.y[j]);

  CornerReduction out;
  out.prefactor = pre;
  out.reduced.x.assign(rap.x.begin(), rap.x.end() - 1);
  out.reduced.y.assign(rap.y.begin() + 1, rap.y.end());
  return out;
}

CornerReduction z_bruteforce_corner_right(const Rapidities& rap, const ModelParams& p) {
  check_square(rap);
  const int L = rap.L();
  if (L < 1) throw PreconditionError("corner reduction needs L >= 1");
  cplx expr = -rap.x[L - 1] + rap.y[L - 1];
  if (std::abs(expr) > 1e-9 * (1.0 + std::abs(rap.x[L - 1])))
    throw PreconditionError("corner specialization -x_L + y_L = 0 not met");

  WeightTable table(p);
  cplx pre = cplx(1.0);
  for (int j = 0; j + 1 < L; ++j)
    pre *= family_weight(table, so_n_model::Family::w1, -rap.x[L - 1] + rap.y[j]);
  pre *= table.c_plus();
  for (int i = 0; i + 1 < L; ++i)
    pre *= family_weight(table, so_n_model::Family::w1, -rap.x[i] + rap.y[L - 1]);

  CornerReduction out;
  out.prefactor = pre;
  out.reduced.x.assign(rap.x.begin(), rap.x.end() - 1);
  out.reduced.y.assign(rap.y.begin(), rap.y.end() - 1);
  return out;
}

cplx z_multiplicative_slice(const Rapidities& rap, int which, cplx t, const ModelParams& p) {
  check_square(rap);
  const int L = rap.L();
  if (which < 0 || which >= L)
    throw PreconditionError("z_multiplicative_slice: line index out of range");

  WeightTable table(p);
  const auto& cp = p.cp;
  // Square roots of the multiplicative line variables; the selected
  // horizontal line carries the free variable t = X^{1/2}.
  std::vector<cplx> sx(L), sy(L);
  for (int i = 0; i < L; ++i)
    sx[i] = (i == which) ? t : bracket_algebra::to_multiplicative(0.5 * rap.x[i], cp);
  for (int j = 0; j < L; ++j)
    sy[j] = bracket_algebra::to_multiplicative(0.5 * rap.y[j], cp);

  // Common multiplicative/additive conversion factor -4 U k^{n/2}.
  const cplx k_half_n = bracket_algebra::k_half_power(p.n, cp);
  return transfer(L, p.n, [&](int i, int j, const VertexState& s) {
    cplx sqrtU = sx[i] / sy[j];
    cplx U = sqrtU * sqrtU;
    cplx w = table.multiplicative_cfg(s, U, sqrtU);
    if (w == cplx(0.0)) return w;
    return w / (-4.0 * U * k_half_n);
  });
}

}  // namespace dwsolve::dw_lattice

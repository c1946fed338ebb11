#include "dwsolve/rmatrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dwsolve::so_n_model {

std::vector<cplx> assemble_r_matrix(cplx u, const ModelParams& p) {
  const int n = p.n;
  WeightTable wt(p);
  std::vector<cplx> R(static_cast<size_t>(n * n) * (n * n), cplx(0.0));
  for (int rho = 1; rho <= n; ++rho)
    for (int sigma = 1; sigma <= n; ++sigma)
      for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu) {
          if (rho + mu != sigma + nu) continue;
          const cplx w = wt.additive({rho, sigma, mu, nu}, u);
          const int row = (sigma - 1) * n + (nu - 1);
          const int col = (rho - 1) * n + (mu - 1);
          R[static_cast<size_t>(row) * n * n + col] = w;
        }
  return R;
}

namespace {

// Sparse view: for each in-pair (rho, mu) the list of (sigma, nu, weight)
// with nonzero weight.  transposed = true swaps the roles of in and out.
struct SparseR {
  int n;
  // indexed by (rho-1)*n + (mu-1); entries (sigma-1, nu-1, w)
  std::vector<std::vector<std::array<int, 2>>> out;
  std::vector<std::vector<cplx>> wts;
};

SparseR make_sparse(cplx u, const ModelParams& p, bool transposed) {
  const int n = p.n;
  WeightTable wt(p);
  SparseR sp;
  sp.n = n;
  sp.out.resize(static_cast<size_t>(n) * n);
  sp.wts.resize(static_cast<size_t>(n) * n);
  for (int rho = 1; rho <= n; ++rho)
    for (int sigma = 1; sigma <= n; ++sigma)
      for (int mu = 1; mu <= n; ++mu)
        for (int nu = 1; nu <= n; ++nu) {
          if (rho + mu != sigma + nu) continue;
          const cplx w = wt.additive({rho, sigma, mu, nu}, u);
          if (w == cplx(0.0)) continue;
          const int in = transposed ? (sigma - 1) * n + (nu - 1) : (rho - 1) * n + (mu - 1);
          const int a = transposed ? rho - 1 : sigma - 1;
          const int b = transposed ? mu - 1 : nu - 1;
          sp.out[static_cast<size_t>(in)].push_back({a, b});
          sp.wts[static_cast<size_t>(in)].push_back(w);
        }
  return sp;
}

// Apply R on tensor factors (f, g) of a dense vector over C^n (x) C^n (x) C^n.
void apply(const SparseR& sp, int f, int g, const std::vector<cplx>& in,
           std::vector<cplx>& outv) {
  const int n = sp.n;
  std::fill(outv.begin(), outv.end(), cplx(0.0));
  int stride[3] = {n * n, n, 1};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int idx = a * n * n + b * n + c;
        const cplx amp = in[static_cast<size_t>(idx)];
        if (amp == cplx(0.0)) continue;
        int digits[3] = {a, b, c};
        const int in_pair = digits[f] * n + digits[g];
        const auto& outs = sp.out[static_cast<size_t>(in_pair)];
        const auto& wts = sp.wts[static_cast<size_t>(in_pair)];
        const int base = idx - digits[f] * stride[f] - digits[g] * stride[g];
        for (size_t t = 0; t < outs.size(); ++t) {
          const int j = base + outs[t][0] * stride[f] + outs[t][1] * stride[g];
          outv[static_cast<size_t>(j)] += amp * wts[t];
        }
      }
}

double residual_impl(cplx u, cplx v, const ModelParams& p, bool transposed) {
  const int n = p.n;
  const SparseR Ru = make_sparse(u, p, transposed);
  const SparseR Ruv = make_sparse(u + v, p, transposed);
  const SparseR Rv = make_sparse(v, p, transposed);
  const size_t dim = static_cast<size_t>(n) * n * n;
  std::vector<cplx> e(dim), t1(dim), t2(dim), lhs(dim), rhs(dim);
  double maxdiff = 0.0, maxmag = 0.0;
  for (size_t col = 0; col < dim; ++col) {
    std::fill(e.begin(), e.end(), cplx(0.0));
    e[col] = 1.0;
    // lhs column: R12(u) R13(u+v) R23(v) e
    apply(Rv, 1, 2, e, t1);
    apply(Ruv, 0, 2, t1, t2);
    apply(Ru, 0, 1, t2, lhs);
    // rhs column: R23(v) R13(u+v) R12(u) e
    apply(Ru, 0, 1, e, t1);
    apply(Ruv, 0, 2, t1, t2);
    apply(Rv, 1, 2, t2, rhs);
    for (size_t i = 0; i < dim; ++i) {
      maxdiff = std::max(maxdiff, std::abs(lhs[i] - rhs[i]));
      maxmag = std::max({maxmag, std::abs(lhs[i]), std::abs(rhs[i])});
    }
  }
  if (maxmag == 0.0) return 0.0;
  return maxdiff / maxmag;
}

}  // namespace

double ybe_residual(cplx u, cplx v, const ModelParams& p) {
  return residual_impl(u, v, p, false);
}

double ybe_residual_transposed(cplx u, cplx v, const ModelParams& p) {
  return residual_impl(u, v, p, true);
}

}  // namespace dwsolve::so_n_model

#pragma once

#include <complex>

#include "dwsolve/params.hpp"

namespace dwsolve::so_n_model {

using bracket_algebra::cplx;

// Colors are integers 1..n.  conjugate(a) = n+1-a.
int conjugate(int n, int a);
// bar(a): a+1/2 below the middle, a at the middle, a-1/2 above.
double bar(int n, int a);
// tilde(a) in {-1/2, 0, +1/2}.  This implementation fixes the gauge in
// which tilde(a) = +1/2 for a < conjugate(a) and -1/2 for a > conjugate(a);
// with the phase conventions of weight_additive below this is the choice
// that satisfies the Yang-Baxter equation and makes the c+ weight a
// u-independent constant [2][n-2].
double tilde(int n, int a);

// One vertex: in-from-left rho, out-right sigma, in-from-bottom mu,
// out-top nu.
struct VertexState {
  int rho, sigma, mu, nu;
};

// Weight family tags of the eight sums building the R-matrix.
enum class Family { zero, w1, w2, w3, w4, w5, w6, w7, w8 };

struct FamilyAssignment {
  Family family = Family::zero;
  int alpha = 0, beta = 0;  // color decorations where applicable
};

// Immutable weight table for fixed (n, lambda); all evaluations pure.
class WeightTable {
 public:
  explicit WeightTable(const ModelParams& p) : p_(p) {}
  const ModelParams& params() const { return p_; }

  // Family membership of a state per the eight sums; Family::zero for
  // non-conserving states and conserving states outside every sum.
  FamilyAssignment classify(const VertexState& s) const;

  // Additive-notation weight at rapidity difference u = -x + y.  Families:
  //   w1 = [u+n-2][u+2]                       (a,a,a,a), a != a'
  //   w2 = [u+n-2][u]                         (a,a,b,b), b != a, b != a'
  //   w3 = [u+n-4][u]                         (a,a,a',a')
  //   w4 = [u+n-2][u] + [2][n-2]              (a,a,a,a), a = a' (odd n)
  //   w5 = [u+n-2][2] e^{-i lam u} phi        (a,b,b,a), a < b, a != b'
  //   w6 = [u+n-2][2] e^{+i lam u} phi        (a,b,b,a), a > b, a != b'
  //   w7 = ([u+n-2] d_{ab'} - [u] e^{i lam (2bar(b)-2bar(a)-n+2)}) [2] e^{-i lam u} phi
  //                                           (a,b,a',b'), a < b
  //   w8 = ([u+n-2] d_{ab'} - [u] e^{i lam (2bar(b)-2bar(a)+n-2)}) [2] e^{+i lam u} phi
  //                                           (a,b,a',b'), a > b
  // with phi = e^{2 i lam (tilde(a)-tilde(b)) u}.  Note the sign of the
  // (n-2) term differs between w7 and w8; this asymmetric pair is the one
  // that satisfies the Yang-Baxter equation (residuals ~1e-16 for n = 3..7).
  cplx additive(const VertexState& s, cplx u) const;

  // Multiplicative-notation weight, U = X/Y with X = k^x, Y = k^y, so that
  // U = k^{-u} = e^{2 i lam u}:
  //   w1 = (U-k^{n-2})(U-k^2)
  //   w2 = (U-k^{n-2})(U-1) k
  //   w3 = (U-k^{n-4})(U-1) k^2
  //   w4 = (U-k^{n-2})(U-1) k + (1-k^{n-2})(1-k^2) U
  //   w5 = (U-k^{n-2})(1-k^2) U^{D}
  //   w6 = (U-k^{n-2})(1-k^2) U^{D+1}
  //   w7 = ((U-k^{n-2}) d_{ab'} - (U-1) k^{bar(a)-bar(b)+n-2}) (1-k^2) U^{D}
  //   w8 = ((U-k^{n-2}) d_{ab'} - (U-1) k^{bar(a)-bar(b)})     (1-k^2) U^{D+1}
  // with D = tilde(a)-tilde(b).  Half-integer powers of U use the principal
  // branch square root.  The ratio multiplicative/additive is the common
  // state-independent factor -4 U k^{n/2} = -4 e^{i lam (2u - n)}.
  cplx multiplicative(const VertexState& s, cplx X, cplx Y) const;

  // Same, with a caller-supplied square root of U fixing the branch of the
  // half-integer powers (used by the Laurent-slice evaluator, where
  // sqrt(U) = t/side-factors is part of the problem statement).
  cplx multiplicative_cfg(const VertexState& s, cplx U, cplx sqrtU) const;

  // The c+ weight: color 1 in from left, n out right, n in from below,
  // 1 out top.  Constant [2][n-2] in this gauge.
  cplx c_plus() const;

 private:
  ModelParams p_;
};

// Laurent degree of a family weight in the multiplicative variable
// (highest minus lowest retained power of U), measured by circle sampling
// and DFT of the weight as a function of t = sqrt(U).  Returns 2 for
// w1..w4, 1 for w5/w6, and 1 or 0 for w7/w8 depending on colors.
int weight_degree(Family family, int alpha, int beta, const ModelParams& p);

}  // namespace dwsolve::so_n_model

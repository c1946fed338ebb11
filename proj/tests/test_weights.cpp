#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <map>

#include "doctest.h"
#include "dwsolve/bracket.hpp"
#include "dwsolve/errors.hpp"
#include "dwsolve/rmatrix.hpp"
#include "dwsolve/weights.hpp"

using namespace dwsolve;
using namespace dwsolve::so_n_model;
using bracket_algebra::cplx;
using bracket_algebra::to_multiplicative;

namespace {

// Enumerate all n^4 vertex states.
template <typename F>
void for_all_states(int n, F&& f) {
  for (int r = 1; r <= n; ++r)
    for (int s = 1; s <= n; ++s)
      for (int m = 1; m <= n; ++m)
        for (int v = 1; v <= n; ++v) f(VertexState{r, s, m, v});
}

}  // namespace

TEST_CASE("color helpers") {
  CHECK(conjugate(5, 2) == 4);
  CHECK(conjugate(4, 1) == 4);
  CHECK(bar(5, 1) == 1.5);
  CHECK(bar(5, 3) == 3.0);
  CHECK(bar(5, 5) == 4.5);
  CHECK(bar(4, 2) == 2.5);
  CHECK(bar(4, 3) == 2.5);
  CHECK(tilde(5, 1) == 0.5);
  CHECK(tilde(5, 3) == 0.0);
  CHECK(tilde(5, 5) == -0.5);
  CHECK(tilde(4, 2) == 0.5);
  CHECK(tilde(4, 3) == -0.5);
}

TEST_CASE("classification counts and color conservation") {
  // n = 3: 2 (w1) + 1 (w4) + 4 (w2) + 2 (w3) + 4 (w5/w6) + 6 (w7/w8) = 19.
  auto p3 = ModelParams::continuous(3, 0.37);
  WeightTable t3(p3);
  std::map<Family, int> hist;
  for_all_states(3, [&](const VertexState& s) {
    auto fa = t3.classify(s);
    if (fa.family != Family::zero) {
      hist[fa.family]++;
      CHECK(s.sigma + s.nu == s.rho + s.mu);  // color conservation
    }
  });
  int total = 0;
  for (auto& [f, c] : hist) total += c;
  CHECK(total == 19);
  CHECK(hist[Family::w1] == 2);
  CHECK(hist[Family::w4] == 1);
  CHECK(hist[Family::w2] == 4);
  CHECK(hist[Family::w3] == 2);
  CHECK(hist[Family::w5] + hist[Family::w6] == 4);
  CHECK(hist[Family::w7] + hist[Family::w8] == 6);

  // n = 4 (even: no w4): 4 + 8 + 4 + 8 + 12 = 36.
  auto p4 = ModelParams::continuous(4, 0.37);
  WeightTable t4(p4);
  int total4 = 0, w4count = 0;
  for_all_states(4, [&](const VertexState& s) {
    auto fa = t4.classify(s);
    if (fa.family != Family::zero) ++total4;
    if (fa.family == Family::w4) ++w4count;
  });
  CHECK(total4 == 36);
  CHECK(w4count == 0);

  // Non-conserving states are always outside every family.
  for_all_states(4, [&](const VertexState& s) {
    if (s.sigma + s.nu != s.rho + s.mu) CHECK(t4.classify(s).family == Family::zero);
  });
}

TEST_CASE("additive weights match frozen reference values (n = 3)") {
  // Independently computed from the bracket products at lambda = 0.37,
  // u = 0.53: w1 = [u+1][u+2], w2 = [u][u+1], w3 = [u-1][u],
  // w4 = [u][u+1] + [1][2].
  auto p = ModelParams::continuous(3, 0.37);
  WeightTable t(p);
  const cplx u(0.53);
  CHECK(std::abs(t.additive({1, 1, 1, 1}, u) - cplx(0.431892401161299)) < 1e-14);
  CHECK(std::abs(t.additive({1, 1, 2, 2}, u) - cplx(0.104504357462103)) < 1e-14);
  CHECK(std::abs(t.additive({1, 1, 3, 3}, u) - cplx(-0.033713122257134)) < 1e-14);
  CHECK(std::abs(t.additive({2, 2, 2, 2}, u) - cplx(0.348337271894266)) < 1e-14);
  // |w5| = |[u+1][2]| (the phase factors are unimodular for real u).
  CHECK(std::abs(std::abs(t.additive({1, 2, 2, 1}, u)) - 0.361650639356700) < 1e-14);
  // c+ = [1][2]
  CHECK(std::abs(t.c_plus() - cplx(0.243832914432164)) < 1e-14);
}

TEST_CASE("the c+ weight is a u-independent constant") {
  for (auto p : {ModelParams::continuous(3, 0.37), ModelParams::continuous(5, 0.61),
                 ModelParams::discrete(5, 1), ModelParams::discrete(6, 2)}) {
    WeightTable t(p);
    const int n = p.n;
    const VertexState corner{1, n, n, 1};
    cplx ref = t.c_plus();
    for (double u : {0.11, 0.53, 0.97, 1.83})
      CHECK(std::abs(t.additive(corner, cplx(u)) - ref) < 1e-14);
    // and the reverse corner state (n, 1, 1, n) carries the same constant
    for (double u : {0.11, 0.53, 0.97})
      CHECK(std::abs(t.additive({n, 1, 1, n}, cplx(u)) - ref) < 1e-14);
  }
}

TEST_CASE("w5/w6 partner states share the bracket modulus |[u+n-2][2]|") {
  auto p = ModelParams::continuous(5, 0.47);
  WeightTable t(p);
  const cplx u(0.53);
  // (1,2,2,1) is w5 (alpha=1 < beta=2), (2,1,1,2) is the reversed w6.
  cplx w5 = t.additive({1, 2, 2, 1}, u);
  cplx w6 = t.additive({2, 1, 1, 2}, u);
  CHECK(std::abs(std::abs(w5) - std::abs(w6)) < 1e-14);
  // for real u all phase factors are unimodular
  double mod = std::abs(bracket_algebra::bracket_shifted(u, 3, p.cp)) *
               std::abs(std::sin(2 * 0.47));
  CHECK(std::abs(std::abs(w5) - mod) < 1e-14);
}

TEST_CASE("multiplicative/additive ratio is the state-independent factor -4 U k^{n/2}") {
  for (int n : {3, 4, 5, 6}) {
    auto p = ModelParams::continuous(n, 0.37);
    WeightTable t(p);
    const cplx x(0.21), y(0.74);
    const cplx u = -x + y;
    const cplx X = to_multiplicative(x, p.cp), Y = to_multiplicative(y, p.cp);
    const cplx U = X / Y;
    const cplx expect = -4.0 * U * std::exp(cplx(0.0, -p.cp.lambda * n));
    for_all_states(n, [&](const VertexState& s) {
      if (t.classify(s).family == Family::zero) return;
      cplx wa = t.additive(s, u);
      cplx wm = t.multiplicative(s, X, Y);
      REQUIRE(std::abs(wa) > 1e-14);
      CHECK(std::abs(wm / wa - expect) < 1e-10);
    });
  }
}

TEST_CASE("multiplicative_cfg honours the caller-chosen square root branch") {
  auto p = ModelParams::continuous(5, 0.37);
  WeightTable t(p);
  const cplx x(0.21), y(0.74);
  const cplx sX = to_multiplicative(0.5 * x, p.cp), sY = to_multiplicative(0.5 * y, p.cp);
  const cplx sU = sX / sY;
  const cplx U = sU * sU;
  for_all_states(5, [&](const VertexState& s) {
    if (t.classify(s).family == Family::zero) return;
    // principal sqrt(U) equals sU here (|arg| small), so the two entry
    // points agree
    CHECK(std::abs(t.multiplicative_cfg(s, U, sU) -
                   t.multiplicative(s, U * to_multiplicative(y, p.cp),
                                    to_multiplicative(y, p.cp))) < 1e-12);
  });
  // flipping the sqrt branch flips weights that carry an odd half-integer
  // power of U: state (1,3,3,1) has tilde(1)-tilde(3) = 1/2
  const VertexState w5state{1, 3, 3, 1};
  cplx a = t.multiplicative_cfg(w5state, U, sU);
  cplx b = t.multiplicative_cfg(w5state, U, -sU);
  CHECK(std::abs(a + b) < 1e-14);
}

TEST_CASE("weight_degree measures the Laurent span of each family") {
  auto p = ModelParams::continuous(5, 0.37);
  CHECK(weight_degree(Family::w1, 1, 1, p) == 2);
  CHECK(weight_degree(Family::w2, 1, 2, p) == 2);
  CHECK(weight_degree(Family::w3, 1, 1, p) == 2);
  CHECK(weight_degree(Family::w4, 3, 3, p) == 2);
  CHECK(weight_degree(Family::w5, 1, 2, p) == 1);
  CHECK(weight_degree(Family::w6, 2, 1, p) == 1);
  CHECK(weight_degree(Family::w7, 1, 2, p) == 1);
  // the two corner states collapse to a single monomial
  CHECK(weight_degree(Family::w7, 1, 5, p) == 0);
  CHECK(weight_degree(Family::w8, 5, 1, p) == 0);
  // invalid color decorations for the family are rejected
  CHECK_THROWS_AS(weight_degree(Family::w5, 1, 1, p), PreconditionError);
  CHECK_THROWS_AS(weight_degree(Family::w5, 1, 5, p), PreconditionError);
}

TEST_CASE("Yang-Baxter equation holds at discrete and generic couplings") {
  const cplx u(0.53), v(0.21);
  for (int n : {3, 4, 5, 6, 7}) {
    auto pc = ModelParams::continuous(n, 0.37);
    CHECK(ybe_residual(u, v, pc) < 1e-12);
    if (n >= 4) {
      auto pd = ModelParams::discrete(n, 1);
      CHECK(ybe_residual(u, v, pd) < 1e-12);
    }
  }
  // degenerate rapidities
  auto p = ModelParams::continuous(4, 0.37);
  CHECK(ybe_residual(cplx(0.0), cplx(0.0), p) < 1e-12);
  CHECK(ybe_residual(u, u, p) < 1e-12);
  // complex rapidities
  CHECK(ybe_residual(cplx(0.3, 0.2), cplx(0.1, -0.4), p) < 1e-12);
  // and the transposed-leg convention satisfies it as well
  CHECK(ybe_residual_transposed(u, v, p) < 1e-12);
}

TEST_CASE("assemble_r_matrix layout and sparsity") {
  auto p = ModelParams::continuous(3, 0.37);
  const cplx u(0.53);
  auto R = assemble_r_matrix(u, p);
  const int n = 3;
  REQUIRE(R.size() == static_cast<std::size_t>(n * n * n * n));
  WeightTable t(p);
  int nonzero = 0;
  for (int row = 0; row < n * n; ++row)
    for (int col = 0; col < n * n; ++col) {
      cplx e = R[static_cast<std::size_t>(row) * n * n + col];
      int sigma = row / n + 1, nu = row % n + 1;
      int rho = col / n + 1, mu = col % n + 1;
      cplx w = t.additive({rho, sigma, mu, nu}, u);
      CHECK(std::abs(e - w) < 1e-15);
      if (e != cplx(0.0)) ++nonzero;
    }
  CHECK(nonzero == 19);
}

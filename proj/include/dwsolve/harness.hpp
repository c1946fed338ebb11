#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dwsolve/lattice.hpp"
#include "dwsolve/params.hpp"

namespace dwsolve::analysis_harness {

using bracket_algebra::cplx;
using dw_lattice::Rapidities;

// |a - b| / max(|a|, |b|, 1e-30): relative difference with a floor so that
// 0 vs 0 compares as 0.
double rel_diff(cplx a, cplx b);

// L values drawn uniformly from [0.1, 0.9], rejection-resampled so that all
// pairwise separations within the list and against `avoid` are >= 0.05.
std::vector<cplx> random_rapidities(int L, std::mt19937_64& rng,
                                    const std::vector<cplx>& avoid = {});

enum class CheckStatus { pass, fail, skip, indeterminate };
const char* to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string note;  // diagnostic detail (exception text etc.), may be empty
};

struct VerificationReport {
  std::string campaign;
  int n = 0;
  std::optional<int> m;  // absent for a generic coupling
  double lambda = 0.0;
  int L = 0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::int64_t elapsed_ms = 0;

  bool all_passed() const;  // every check pass or skip
};

// Laurent support of a function on the circle |t| = r, sampled at S roots of
// unity and projected by DFT onto exponents in [-S/2, S/2).  Retained
// exponents are those whose coefficient exceeds 1e-8 * max|sample|.
struct LaurentSpan {
  std::vector<int> exponents;  // retained t-exponents, ascending
  bool all_zero = false;
  int lo() const { return all_zero ? 0 : exponents.front(); }
  int hi() const { return all_zero ? 0 : exponents.back(); }
  int span_t() const { return hi() - lo(); }
  // Z is a Laurent polynomial in X = t^2, so the X-span is half the t-span.
  int span_x() const { return span_t() / 2; }
};

// Throws AliasError if a coefficient is retained at the Nyquist exponent
// -S/2 (the sampling rate cannot separate +S/2 from -S/2, so the measured
// span would be untrustworthy).
LaurentSpan extract_laurent_span(const std::function<cplx(cplx)>& evaluator,
                                 int S, double r = 1.0);

struct SweepPoint {
  double lambda = 0.0;
  double rel = 0.0;       // rel_diff(z_bruteforce, z_determinant)
  int snapped_m = -1;     // m of the snapped discrete coupling, -1 if none
  CheckStatus status = CheckStatus::pass;  // skip = pole at this grid point
};

// Compares the two evaluations of Z over a lambda grid at one random
// rapidity set drawn from `seed`.  Grid values within 1e-9 of a discrete
// coupling m*pi/(2(n-3)) are evaluated in exact discrete mode; values
// within [1e-9, 1e-3] are flagged indeterminate (too close to a discrete
// point to trust a continuous-mode comparison); grid points where a bracket
// pole prevents evaluation are flagged skip.
std::vector<SweepPoint> lambda_sweep(int n, int L, const std::vector<double>& grid,
                                     std::uint64_t seed);

// Measures removability of the determinant-formula singularity on the row
// coincidence locus -x1 + x2 + (n-2) = 0, approached with
// x2 = x1 - (n-2) + eps for eps in {1e-3, 1e-4, 1e-5}.  When the three
// values settle, `measured` is their worst consecutive relative variation.
// When Z itself has a zero on the locus the variation cannot settle (the
// values shrink linearly with eps), so the quadratic extrapolation to
// eps = 0 is compared instead against the exactly evaluable brute-force
// value on the locus, normalized by the largest magnitude involved;
// `anchored` marks that branch.  A genuine pole still fails: the
// extrapolation inherits its blowup.  n = 6 discrete couplings are the
// known case with a zero on the locus.
struct PoleCancellation {
  double measured = 0.0;
  bool anchored = false;
};
PoleCancellation pole_cancellation_measure(const Rapidities& base,
                                           const ModelParams& p);

struct SuiteOptions {
  int threads = 1;
  bool deterministic = false;  // report elapsed_ms = 0 for byte-stable output
};

// Runs the full property-check battery at the given parameters: Yang-Baxter
// residual, permutation symmetry of both evaluations, denominator symmetry,
// row coincidences, pole cancellation, Laurent span, corner recursions on
// both sides, the L = 1 initial condition, and brute-force/determinant
// equality on random rapidity sets.  Check RNGs are derived from `seed` per
// check, so reports are identical for any thread count.
VerificationReport run_proof_suite(const ModelParams& p, int L, std::uint64_t seed,
                                   const SuiteOptions& opt = {});
// Convenience overload for discrete couplings (n >= 4).
VerificationReport run_proof_suite(int n, int m, int L, std::uint64_t seed,
                                   const SuiteOptions& opt = {});

// Serialization.  Numbers are printed with 17 significant digits so that
// reports round-trip doubles exactly.
std::string report_to_json(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);
std::string sweep_to_csv(const std::vector<SweepPoint>& pts);

}  // namespace dwsolve::analysis_harness

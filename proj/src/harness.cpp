#include "dwsolve/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

#include "dwsolve/determinant.hpp"
#include "dwsolve/errors.hpp"
#include "dwsolve/rmatrix.hpp"
#include "dwsolve/weights.hpp"

namespace dwsolve::analysis_harness {

using bracket_algebra::kPi;
using determinant_formula::RowCoincidence;

double rel_diff(cplx a, cplx b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-30});
}

std::vector<cplx> random_rapidities(int L, std::mt19937_64& rng,
                                    const std::vector<cplx>& avoid) {
  std::uniform_real_distribution<double> dist(0.1, 0.9);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(L));
  const double sep = 0.05;
  while (static_cast<int>(out.size()) < L) {
    bool placed = false;
    for (int attempt = 0; attempt < 1000; ++attempt) {
      cplx v(dist(rng), 0.0);
      bool ok = true;
      for (const cplx& w : out)
        if (std::abs(v - w) < sep) { ok = false; break; }
      for (const cplx& w : avoid)
        if (std::abs(v - w) < sep) { ok = false; break; }
      if (ok) {
        out.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw PreconditionError("random_rapidities: could not sample separated values");
  }
  return out;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    default: return "indeterminate";
  }
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail || c.status == CheckStatus::indeterminate)
      return false;
  return true;
}

LaurentSpan extract_laurent_span(const std::function<cplx(cplx)>& evaluator,
                                 int S, double r) {
  if (S < 2 || S % 2 != 0)
    throw PreconditionError("extract_laurent_span: sample count must be even and >= 2");
  std::vector<cplx> samp(static_cast<std::size_t>(S));
  double maxmag = 0.0;
  for (int k = 0; k < S; ++k) {
    double th = 2.0 * kPi * k / S;
    samp[static_cast<std::size_t>(k)] = evaluator(r * cplx(std::cos(th), std::sin(th)));
    maxmag = std::max(maxmag, std::abs(samp[static_cast<std::size_t>(k)]));
  }
  LaurentSpan out;
  if (maxmag == 0.0) {
    out.all_zero = true;
    return out;
  }
  for (int e = -S / 2; e < S / 2; ++e) {
    cplx c(0.0);
    for (int k = 0; k < S; ++k) {
      double th = -2.0 * kPi * k * e / S;
      c += samp[static_cast<std::size_t>(k)] * cplx(std::cos(th), std::sin(th));
    }
    c /= static_cast<double>(S);
    if (r != 1.0) c /= std::pow(r, static_cast<double>(e));
    if (std::abs(c) > 1e-8 * maxmag) {
      if (e == -S / 2)
        throw AliasError("extract_laurent_span: content at the Nyquist exponent; "
                         "increase the sample count");
      out.exponents.push_back(e);
    }
  }
  if (out.exponents.empty()) out.all_zero = true;
  return out;
}

std::vector<SweepPoint> lambda_sweep(int n, int L, const std::vector<double>& grid,
                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Rapidities rap;
  rap.x = random_rapidities(L, rng);
  rap.y = random_rapidities(L, rng, rap.x);

  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (double lambda : grid) {
    SweepPoint pt;
    pt.lambda = lambda;
    ModelParams p = ModelParams::continuous(n, lambda);
    if (n >= 4) {
      const double step = kPi / (2.0 * (n - 3));
      const long m = std::lround(lambda / step);
      const double dist = std::abs(lambda - static_cast<double>(m) * step);
      if (dist < 1e-9) {
        p = ModelParams::discrete(n, static_cast<int>(m));
        pt.snapped_m = static_cast<int>(m);
      } else if (dist < 1e-3) {
        pt.status = CheckStatus::indeterminate;
        out.push_back(pt);
        continue;
      }
    }
    try {
      cplx zb = dw_lattice::z_bruteforce(rap, p);
      cplx zd = determinant_formula::z_determinant(rap, p);
      pt.rel = rel_diff(zb, zd);
    } catch (const PoleError&) {
      pt.status = CheckStatus::skip;
    }
    out.push_back(pt);
  }
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::size_t idx) {
  return splitmix64(master ^ splitmix64(0x5D7A9F04C2E6B831ULL + idx));
}

Rapidities draw_rapidities(int L, std::mt19937_64& rng) {
  Rapidities rap;
  rap.x = random_rapidities(L, rng);
  rap.y = random_rapidities(L, rng, rap.x);
  return rap;
}

cplx z_det_or_one(const Rapidities& rap, const ModelParams& p) {
  return rap.L() == 0 ? cplx(1.0) : determinant_formula::z_determinant(rap, p);
}

cplx z_brute_or_one(const Rapidities& rap, const ModelParams& p) {
  return rap.L() == 0 ? cplx(1.0) : dw_lattice::z_bruteforce(rap, p);
}

// Quadratic extrapolation of f at 0 from nodes d[0..2].
cplx extrapolate3(const double* d, const cplx* v) {
  cplx out(0.0);
  for (int k = 0; k < 3; ++k) {
    double c = 1.0;
    for (int l = 0; l < 3; ++l)
      if (l != k) c *= (0.0 - d[l]) / (d[k] - d[l]);
    out += c * v[k];
  }
  return out;
}

}  // namespace

PoleCancellation pole_cancellation_measure(const Rapidities& base,
                                           const ModelParams& p) {
  const double eps[3] = {1e-3, 1e-4, 1e-5};
  cplx v[3];
  for (int k = 0; k < 3; ++k) {
    Rapidities r2 = base;
    r2.x[1] = base.x[0] - static_cast<double>(p.n - 2) + eps[k];
    v[k] = determinant_formula::z_determinant(r2, p);
  }
  PoleCancellation out;
  out.measured = std::max(rel_diff(v[0], v[1]), rel_diff(v[1], v[2]));
  if (out.measured <= 1e-2) return out;
  Rapidities exact = base;
  exact.x[1] = base.x[0] - static_cast<double>(p.n - 2);
  cplx zb = dw_lattice::z_bruteforce(exact, p);
  cplx ex = extrapolate3(eps, v);
  double scale = std::max(
      {std::abs(v[0]), std::abs(v[1]), std::abs(v[2]), std::abs(zb), 1e-30});
  out.measured = std::abs(ex - zb) / scale;
  out.anchored = true;
  return out;
}

namespace {

struct CheckContext {
  const ModelParams& p;
  int L;
  std::uint64_t seed;  // already derived for this check
  std::mt19937_64 rng;
  CheckContext(const ModelParams& p_, int L_, std::uint64_t s)
      : p(p_), L(L_), seed(s), rng(s) {}
  bool sign_structure_known() const { return p.n == 3 || p.is_discrete(); }
};

CheckRecord make_skip(const std::string& name, const std::string& why) {
  CheckRecord r;
  r.name = name;
  r.status = CheckStatus::skip;
  r.note = why;
  return r;
}

CheckRecord graded(const std::string& name, double measured, double tol) {
  CheckRecord r;
  r.name = name;
  r.measured = measured;
  r.tolerance = tol;
  r.status = (measured <= tol) ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckRecord check_ybe(CheckContext& cx) {
  std::uniform_real_distribution<double> dist(0.1, 0.9);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    cplx u(dist(cx.rng), 0.0), v(dist(cx.rng), 0.0);
    worst = std::max(worst, so_n_model::ybe_residual(u, v, cx.p));
  }
  return graded("ybe_residual", worst, 1e-10);
}

CheckRecord check_perm(CheckContext& cx, bool det_side, bool swap_x) {
  const std::string name = std::string("perm_symmetry_") +
                           (det_side ? "det_" : "brute_") + (swap_x ? "x" : "y");
  if (cx.L < 2) return make_skip(name, "needs L >= 2");
  Rapidities rap = draw_rapidities(cx.L, cx.rng);
  auto eval = [&](const Rapidities& r) {
    return det_side ? determinant_formula::z_determinant(r, cx.p)
                    : dw_lattice::z_bruteforce(r, cx.p);
  };
  cplx z1 = eval(rap);
  Rapidities rap2 = rap;
  if (swap_x)
    std::swap(rap2.x[0], rap2.x[1]);
  else
    std::swap(rap2.y[0], rap2.y[1]);
  cplx z2 = eval(rap2);
  return graded(name, rel_diff(z1, z2), 1e-10);
}

CheckRecord check_d_symmetry(CheckContext& cx) {
  if (cx.L < 2) return make_skip("d_symmetry", "needs L >= 2");
  Rapidities rap = draw_rapidities(cx.L, cx.rng);
  cplx d0 = determinant_formula::prefactor_d(rap, cx.p);
  Rapidities rx = rap;
  std::swap(rx.x[0], rx.x[1]);
  Rapidities ry = rap;
  std::swap(ry.y[0], ry.y[1]);
  double worst = std::max(rel_diff(d0, determinant_formula::prefactor_d(rx, cx.p)),
                          rel_diff(d0, determinant_formula::prefactor_d(ry, cx.p)));
  return graded("d_symmetry", worst, 1e-10);
}

CheckRecord check_row_coincidence(CheckContext& cx, RowCoincidence which) {
  const std::string name = std::string("row_coincidence_") +
                           (which == RowCoincidence::upper ? "upper" : "lower");
  if (cx.L < 2) return make_skip(name, "needs L >= 2");
  if (!cx.sign_structure_known())
    return make_skip(name, "needs a discrete coupling for n >= 4");
  Rapidities rap = draw_rapidities(cx.L, cx.rng);
  const int shift = (which == RowCoincidence::upper) ? cx.p.n - 2 : cx.p.n - 4;
  rap.x[1] = rap.x[0] - static_cast<double>(shift);
  double measured = determinant_formula::row_coincidence_check(rap, cx.p, 1, 2, which);
  return graded(name, measured, 1e-10);
}

CheckRecord check_pole_cancellation(CheckContext& cx) {
  if (cx.L < 2) return make_skip("pole_cancellation", "needs L >= 2");
  Rapidities rap = draw_rapidities(cx.L, cx.rng);
  auto pc = pole_cancellation_measure(rap, cx.p);
  CheckRecord r = graded("pole_cancellation", pc.measured, 1e-2);
  if (pc.anchored)
    r.note =
        "variation did not settle; extrapolated limit compared against the "
        "exactly evaluated value";
  return r;
}

CheckRecord check_laurent_span(CheckContext& cx) {
  Rapidities rap = draw_rapidities(cx.L, cx.rng);
  const int S = 8 * cx.L + 8;
  auto eval = [&](cplx t) {
    return dw_lattice::z_multiplicative_slice(rap, 0, t, cx.p);
  };
  LaurentSpan span = extract_laurent_span(eval, S, 1.0);
  const int expected = 2 * cx.L - 2;
  CheckRecord r;
  r.name = "laurent_span";
  r.measured = static_cast<double>(span.span_x());
  r.tolerance = static_cast<double>(expected);
  r.status = (span.all_zero || span.span_x() == expected) ? CheckStatus::pass
                                                          : CheckStatus::fail;
  if (span.all_zero) r.note = "all samples zero (degenerate coupling)";
  return r;
}

CheckRecord check_corner_brute(CheckContext& cx, bool left) {
  const std::string name = left ? "left_corner_brute" : "right_corner_brute";
  Rapidities rap = draw_rapidities(cx.L, cx.rng);
  const int L = cx.L;
  if (left)
    rap.x[L - 1] = rap.y[0] + static_cast<double>(cx.p.n - 2);
  else
    rap.x[L - 1] = rap.y[L - 1];
  auto corner = left ? dw_lattice::z_bruteforce_corner_left(rap, cx.p)
                     : dw_lattice::z_bruteforce_corner_right(rap, cx.p);
  cplx full = dw_lattice::z_bruteforce(rap, cx.p);
  cplx reduced = z_brute_or_one(corner.reduced, cx.p);
  return graded(name, rel_diff(full, corner.prefactor * reduced), 1e-10);
}

CheckRecord check_corner_det(CheckContext& cx, bool left) {
  const std::string name = left ? "left_corner_det" : "right_corner_det";
  if (!cx.sign_structure_known())
    return make_skip(name, "needs a discrete coupling for n >= 4");
  Rapidities rap = draw_rapidities(cx.L, cx.rng);
  const int L = cx.L;
  cplx target = left ? rap.y[0] + static_cast<double>(cx.p.n - 2) : rap.y[L - 1];
  // The block matrix is singular exactly at the corner specialization (the
  // determinant cancels a double pole of N/D), so the determinant side is
  // evaluated by quadratic extrapolation along the approach direction.
  const double delta[3] = {1e-4, 5e-5, 2.5e-5};
  cplx v[3];
  for (int k = 0; k < 3; ++k) {
    Rapidities r2 = rap;
    r2.x[L - 1] = target + delta[k];
    v[k] = determinant_formula::z_determinant(r2, cx.p);
  }
  cplx approached = extrapolate3(delta, v);
  Rapidities exact = rap;
  exact.x[L - 1] = target;
  auto corner = left ? dw_lattice::z_bruteforce_corner_left(exact, cx.p)
                     : dw_lattice::z_bruteforce_corner_right(exact, cx.p);
  cplx reduced = z_det_or_one(corner.reduced, cx.p);
  return graded(name, rel_diff(approached, corner.prefactor * reduced), 1e-9);
}

CheckRecord check_initial_condition(CheckContext& cx) {
  std::uniform_real_distribution<double> dist(0.1, 0.9);
  Rapidities rap;
  rap.x = {cplx(dist(cx.rng), 0.0)};
  rap.y = {cplx(dist(cx.rng), 0.0)};
  so_n_model::WeightTable table(cx.p);
  cplx target = table.c_plus();
  double worst = rel_diff(dw_lattice::z_bruteforce(rap, cx.p), target);
  if (cx.sign_structure_known())
    worst = std::max(worst,
                     rel_diff(determinant_formula::z_determinant(rap, cx.p), target));
  return graded("initial_condition", worst, 1e-10);
}

CheckRecord check_equality(CheckContext& cx) {
  double worst = 0.0;
  for (int k = 0; k < 10; ++k) {
    Rapidities rap = draw_rapidities(cx.L, cx.rng);
    cplx zb = dw_lattice::z_bruteforce(rap, cx.p);
    cplx zd = determinant_formula::z_determinant(rap, cx.p);
    worst = std::max(worst, rel_diff(zb, zd));
  }
  return graded("equality", worst, 1e-9);
}

}  // namespace

VerificationReport run_proof_suite(const ModelParams& p, int L, std::uint64_t seed,
                                   const SuiteOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();

  using Task = std::function<CheckRecord(CheckContext&)>;
  struct Named {
    const char* name;  // for error records when a task throws
    Task task;
  };
  const std::vector<Named> tasks = {
      {"ybe_residual", [](CheckContext& c) { return check_ybe(c); }},
      {"perm_symmetry_brute_x", [](CheckContext& c) { return check_perm(c, false, true); }},
      {"perm_symmetry_brute_y", [](CheckContext& c) { return check_perm(c, false, false); }},
      {"perm_symmetry_det_x", [](CheckContext& c) { return check_perm(c, true, true); }},
      {"perm_symmetry_det_y", [](CheckContext& c) { return check_perm(c, true, false); }},
      {"d_symmetry", [](CheckContext& c) { return check_d_symmetry(c); }},
      {"row_coincidence_upper",
       [](CheckContext& c) { return check_row_coincidence(c, RowCoincidence::upper); }},
      {"row_coincidence_lower",
       [](CheckContext& c) { return check_row_coincidence(c, RowCoincidence::lower); }},
      {"pole_cancellation", [](CheckContext& c) { return check_pole_cancellation(c); }},
      {"laurent_span", [](CheckContext& c) { return check_laurent_span(c); }},
      {"left_corner_brute", [](CheckContext& c) { return check_corner_brute(c, true); }},
      {"left_corner_det", [](CheckContext& c) { return check_corner_det(c, true); }},
      {"right_corner_brute", [](CheckContext& c) { return check_corner_brute(c, false); }},
      {"right_corner_det", [](CheckContext& c) { return check_corner_det(c, false); }},
      {"initial_condition", [](CheckContext& c) { return check_initial_condition(c); }},
      {"equality", [](CheckContext& c) { return check_equality(c); }},
  };

  std::vector<CheckRecord> results(tasks.size());
  auto run_one = [&](std::size_t i) {
    CheckContext cx(p, L, derive_seed(seed, i));
    try {
      results[i] = tasks[i].task(cx);
    } catch (const std::exception& e) {
      CheckRecord r;
      r.name = tasks[i].name;
      r.status = CheckStatus::fail;
      r.measured = 1e300;
      r.note = e.what();
      results[i] = r;
    }
  };

  const int threads = std::max(1, opt.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) run_one(i);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
  }

  VerificationReport rep;
  rep.campaign = "proof_suite";
  rep.n = p.n;
  if (p.is_discrete()) rep.m = p.cp.discrete->first;
  rep.lambda = p.cp.lambda;
  rep.L = L;
  rep.seed = seed;
  rep.checks = std::move(results);
  rep.elapsed_ms =
      opt.deterministic
          ? 0
          : std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  return rep;
}

VerificationReport run_proof_suite(int n, int m, int L, std::uint64_t seed,
                                   const SuiteOptions& opt) {
  if (n < 4)
    throw PreconditionError(
        "discrete couplings need n >= 4; pass ModelParams for n = 3");
  return run_proof_suite(ModelParams::discrete(n, m), L, seed, opt);
}

namespace {

void append_g17(std::string& s, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  s += buf;
}

void append_json_string(std::string& s, const std::string& v) {
  s += '"';
  for (char ch : v) {
    switch (ch) {
      case '"': s += "\\\""; break;
      case '\\': s += "\\\\"; break;
      case '\n': s += "\\n"; break;
      case '\t': s += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          s += buf;
        } else {
          s += ch;
        }
    }
  }
  s += '"';
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  std::string s = "{\"campaign\":";
  append_json_string(s, r.campaign);
  s += ",\"params\":{\"n\":" + std::to_string(r.n) + ",\"m\":";
  s += r.m ? std::to_string(*r.m) : std::string("null");
  s += ",\"lambda\":";
  append_g17(s, r.lambda);
  s += ",\"L\":" + std::to_string(r.L) + "}";
  s += ",\"seed\":" + std::to_string(r.seed);
  s += ",\"checks\":[";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const auto& c = r.checks[i];
    if (i) s += ',';
    s += "{\"name\":";
    append_json_string(s, c.name);
    s += ",\"status\":\"";
    s += to_string(c.status);
    s += "\",\"measured\":";
    append_g17(s, c.measured);
    s += ",\"tolerance\":";
    append_g17(s, c.tolerance);
    if (!c.note.empty()) {
      s += ",\"note\":";
      append_json_string(s, c.note);
    }
    s += '}';
  }
  s += "],\"elapsed_ms\":" + std::to_string(r.elapsed_ms) + "}";
  return s;
}

std::string report_to_csv(const VerificationReport& r) {
  std::string s = "campaign,n,m,lambda,L,seed,name,status,measured,tolerance\n";
  for (const auto& c : r.checks) {
    s += r.campaign + ',' + std::to_string(r.n) + ',';
    if (r.m) s += std::to_string(*r.m);
    s += ',';
    append_g17(s, r.lambda);
    s += ',' + std::to_string(r.L) + ',' + std::to_string(r.seed) + ',';
    s += c.name + ',';
    s += to_string(c.status);
    s += ',';
    append_g17(s, c.measured);
    s += ',';
    append_g17(s, c.tolerance);
    s += '\n';
  }
  return s;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& pts) {
  std::string s = "lambda,rel_diff\n";
  for (const auto& pt : pts) {
    if (pt.status != CheckStatus::pass) continue;
    append_g17(s, pt.lambda);
    s += ',';
    append_g17(s, pt.rel);
    s += '\n';
  }
  return s;
}

}  // namespace dwsolve::analysis_harness

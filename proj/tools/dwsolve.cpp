// dwsolve: domain-wall partition function of the level-1 affine so(n)
// vertex model, computed by exact lattice enumeration and by a 2L x 2L
// block-determinant formula, plus the verification battery relating them.
//
// Exit codes: 0 success, 1 runtime error, 2 mismatch or failed check,
// 64 usage error, 65 state-space budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dwsolve/determinant.hpp"
#include "dwsolve/errors.hpp"
#include "dwsolve/harness.hpp"
#include "dwsolve/lattice.hpp"
#include "dwsolve/rmatrix.hpp"
#include "dwsolve/weights.hpp"

namespace {

using dwsolve::ModelParams;
using dwsolve::bracket_algebra::cplx;
using dwsolve::bracket_algebra::kPi;
using dwsolve::dw_lattice::Rapidities;

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_complex(cplx z) {
  return "[" + g17(z.real()) + "," + g17(z.imag()) + "]";
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
  }
}

cplx parse_complex(const std::string& tok) {
  std::string s = tok;
  if (s.empty()) throw dwsolve::UsageError("empty rapidity token");
  if (s.back() == 'i' || s.back() == 'I') {
    s.pop_back();
    // Split "a+bi" / "a-bi" at the last sign that is not an exponent sign
    // and not the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      // pure imaginary: "bi", "+bi", "-bi", "i"
      if (s.empty() || s == "+" || s == "-") s += '1';
      return cplx(0.0, std::stod(s));
    }
    std::string re = s.substr(0, split), im = s.substr(split);
    if (im == "+" || im == "-") im += '1';
    return cplx(std::stod(re), std::stod(im));
  }
  return cplx(std::stod(s), 0.0);
}

std::vector<cplx> parse_list(const std::string& csv) {
  std::vector<cplx> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) out.push_back(parse_complex(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct ParamFlags {
  int n = 4;
  std::optional<int> m;
  std::optional<double> lambda;
  bool force_continuous = false;
};

ModelParams resolve_params(const ParamFlags& f) {
  if (f.n < 3) throw dwsolve::UsageError("--n must be >= 3");
  if (f.n == 3) {
    if (f.m) throw dwsolve::UsageError("n = 3 has no discrete m; use --lambda");
    if (!f.lambda) throw dwsolve::UsageError("n = 3 requires --lambda");
    return ModelParams::continuous(3, *f.lambda);
  }
  if (f.m && f.lambda)
    throw dwsolve::UsageError("give exactly one of --m and --lambda");
  if (f.m) return ModelParams::discrete(f.n, *f.m);
  if (!f.lambda) throw dwsolve::UsageError("give one of --m and --lambda");
  if (!f.force_continuous)
    throw dwsolve::UsageError(
        "for n >= 4 the determinant identity needs the discrete coupling "
        "lambda = m*pi/(2(n-3)); pass --m, or --force-continuous to evaluate "
        "at a generic lambda anyway");
  return ModelParams::continuous(f.n, *f.lambda);
}

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--n", f.n, "so(n) rank parameter, n >= 3")->required();
  cmd->add_option("--m", f.m, "discrete coupling index: lambda = m*pi/(2(n-3))");
  cmd->add_option("--lambda", f.lambda, "crossing parameter lambda");
  cmd->add_flag("--force-continuous", f.force_continuous,
                "allow generic lambda for n >= 4 (identity checks will fail)");
}

std::string params_json(const ModelParams& p, int L) {
  std::string s = "{\"n\":" + std::to_string(p.n) + ",\"m\":";
  s += p.is_discrete() ? std::to_string(p.cp.discrete->first) : std::string("null");
  s += ",\"lambda\":" + g17(p.cp.lambda) + ",\"L\":" + std::to_string(L) + "}";
  return s;
}

int cmd_z(const ParamFlags& pf, int L, const std::string& xs, const std::string& ys,
          bool random, std::uint64_t seed, double tol, const std::string& format,
          const std::string& out_path) {
  ModelParams p = resolve_params(pf);
  Rapidities rap;
  if (random) {
    if (!xs.empty() || !ys.empty())
      throw dwsolve::UsageError("--random excludes --x/--y");
    if (L < 1) throw dwsolve::UsageError("--L must be >= 1");
    std::mt19937_64 rng(seed);
    rap.x = dwsolve::analysis_harness::random_rapidities(L, rng);
    rap.y = dwsolve::analysis_harness::random_rapidities(L, rng, rap.x);
  } else {
    if (xs.empty() || ys.empty())
      throw dwsolve::UsageError("give --x and --y lists, or --random");
    rap.x = parse_list(xs);
    rap.y = parse_list(ys);
    if (rap.x.size() != rap.y.size())
      throw dwsolve::UsageError("--x and --y must have the same length");
    if (L > 0 && L != rap.L())
      throw dwsolve::UsageError("--L disagrees with the rapidity list length");
    if (rap.L() < 1) throw dwsolve::UsageError("need at least one rapidity");
  }

  cplx zb = dwsolve::dw_lattice::z_bruteforce(rap, p);
  bool warn = false;
  cplx zd = dwsolve::determinant_formula::z_determinant(rap, p, &warn);
  double rd = dwsolve::analysis_harness::rel_diff(zb, zd);
  bool match = rd <= tol;

  std::string text;
  if (format == "csv") {
    text = "quantity,re,im\n";
    for (int i = 0; i < rap.L(); ++i)
      text += "x" + std::to_string(i + 1) + ',' + g17(rap.x[i].real()) + ',' +
              g17(rap.x[i].imag()) + '\n';
    for (int j = 0; j < rap.L(); ++j)
      text += "y" + std::to_string(j + 1) + ',' + g17(rap.y[j].real()) + ',' +
              g17(rap.y[j].imag()) + '\n';
    text += "z_bruteforce," + g17(zb.real()) + ',' + g17(zb.imag()) + '\n';
    text += "z_determinant," + g17(zd.real()) + ',' + g17(zd.imag()) + '\n';
    text += "rel_diff," + g17(rd) + ",0\n";
  } else {
    text = "{\"campaign\":\"z\",\"params\":" + params_json(p, rap.L());
    text += ",\"x\":[";
    for (int i = 0; i < rap.L(); ++i)
      text += std::string(i ? "," : "") + json_complex(rap.x[i]);
    text += "],\"y\":[";
    for (int j = 0; j < rap.L(); ++j)
      text += std::string(j ? "," : "") + json_complex(rap.y[j]);
    text += "],\"z_bruteforce\":" + json_complex(zb);
    text += ",\"z_determinant\":" + json_complex(zd);
    text += ",\"rel_diff\":" + g17(rd);
    text += ",\"tolerance\":" + g17(tol);
    text += ",\"match\":" + std::string(match ? "true" : "false");
    if (warn) text += ",\"condition_warning\":true";
    text += "}";
  }
  write_output(text, out_path);
  return match ? 0 : 2;
}

int cmd_verify(const ParamFlags& pf, int L, std::uint64_t seed, int threads,
               bool deterministic, const std::string& format,
               const std::string& out_path) {
  ModelParams p = resolve_params(pf);
  if (L < 1) throw dwsolve::UsageError("--L must be >= 1");
  dwsolve::analysis_harness::SuiteOptions opt;
  opt.threads = threads;
  opt.deterministic = deterministic;
  auto rep = dwsolve::analysis_harness::run_proof_suite(p, L, seed, opt);
  std::string text = (format == "csv")
                         ? dwsolve::analysis_harness::report_to_csv(rep)
                         : dwsolve::analysis_harness::report_to_json(rep);
  write_output(text, out_path);
  return rep.all_passed() ? 0 : 2;
}

int cmd_sweep(int n, int L, int points, double min_lambda, double max_lambda,
              std::uint64_t seed, const std::string& format,
              const std::string& out_path) {
  if (n < 3) throw dwsolve::UsageError("--n must be >= 3");
  if (L < 1) throw dwsolve::UsageError("--L must be >= 1");
  if (points < 2) throw dwsolve::UsageError("--points must be >= 2");
  std::vector<double> grid;
  for (int k = 1; k < points; ++k)
    grid.push_back(min_lambda + (max_lambda - min_lambda) * k / points);
  auto pts = dwsolve::analysis_harness::lambda_sweep(n, L, grid, seed);

  int skipped = 0;
  for (const auto& pt : pts)
    if (pt.status != dwsolve::analysis_harness::CheckStatus::pass) ++skipped;
  if (skipped > 0)
    std::cerr << "sweep: " << skipped
              << " grid point(s) skipped (bracket pole or too close to a "
                 "discrete coupling)\n";

  std::string text;
  if (format == "csv") {
    text = dwsolve::analysis_harness::sweep_to_csv(pts);
  } else {
    text = "{\"campaign\":\"lambda_sweep\",\"n\":" + std::to_string(n) +
           ",\"L\":" + std::to_string(L) + ",\"seed\":" + std::to_string(seed) +
           ",\"points\":[";
    bool first = true;
    for (const auto& pt : pts) {
      if (!first) text += ',';
      first = false;
      text += "{\"lambda\":" + g17(pt.lambda) + ",\"rel_diff\":" + g17(pt.rel);
      text += ",\"status\":\"";
      text += dwsolve::analysis_harness::to_string(pt.status);
      text += "\"";
      if (pt.snapped_m >= 0) text += ",\"m\":" + std::to_string(pt.snapped_m);
      text += "}";
    }
    text += "]}";
  }
  write_output(text, out_path);
  return 0;
}

int cmd_dump_r(const ParamFlags& pf, double u_re, double u_im,
               const std::string& out_path) {
  ModelParams p = resolve_params(pf);
  const cplx u(u_re, u_im);
  const int n = p.n;
  auto R = dwsolve::so_n_model::assemble_r_matrix(u, p);

  std::string text = "{\"campaign\":\"dump_r\",\"params\":" + params_json(p, 0);
  text += ",\"u\":" + json_complex(u);
  text +=
      ",\"convention\":\"R is (n^2)x(n^2), row-major; row index = "
      "(sigma-1)*n+(nu-1) for the out-pair (sigma right, nu top), column "
      "index = (rho-1)*n+(mu-1) for the in-pair (rho left, mu bottom)\"";
  text += ",\"entries\":[";
  bool first = true;
  int count = 0;
  for (int row = 0; row < n * n; ++row)
    for (int col = 0; col < n * n; ++col) {
      cplx v = R[static_cast<std::size_t>(row) * n * n + col];
      if (v == cplx(0.0)) continue;
      if (!first) text += ',';
      first = false;
      ++count;
      text += "{\"row\":" + std::to_string(row) + ",\"col\":" + std::to_string(col);
      text += ",\"sigma\":" + std::to_string(row / n + 1) +
              ",\"nu\":" + std::to_string(row % n + 1);
      text += ",\"rho\":" + std::to_string(col / n + 1) +
              ",\"mu\":" + std::to_string(col % n + 1);
      text += ",\"value\":" + json_complex(v) + "}";
    }
  text += "],\"nonzero_count\":" + std::to_string(count) + "}";
  write_output(text, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Domain-wall partition function of the level-1 affine so(n) vertex "
      "model: exact enumeration, block-determinant formula, and the "
      "verification battery relating them."};
  app.require_subcommand(1);

  // ---- z ----
  auto* z = app.add_subcommand("z", "compute Z by both routes and compare");
  ParamFlags z_pf;
  add_param_flags(z, z_pf);
  int z_L = 0;
  std::string z_x, z_y, z_format = "json", z_out;
  bool z_random = false;
  std::uint64_t z_seed = 1;
  double z_tol = 1e-9;
  z->add_option("--L", z_L, "lattice size (inferred from --x when omitted)");
  z->add_option("--x", z_x, "comma list of horizontal rapidities (tokens like 0.3 or 0.3+0.1i)");
  z->add_option("--y", z_y, "comma list of vertical rapidities");
  z->add_flag("--random", z_random, "draw rapidities at random (with --seed, --L)");
  z->add_option("--seed", z_seed, "RNG seed for --random");
  z->add_option("--tol", z_tol, "relative tolerance for the match verdict");
  z->add_option("--format", z_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  z->add_option("--out", z_out, "write the report to a file instead of stdout");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run the full property-check battery");
  ParamFlags v_pf;
  add_param_flags(verify, v_pf);
  int v_L = 2, v_threads = 1;
  std::uint64_t v_seed = 1;
  bool v_det = false;
  std::string v_format = "json", v_out;
  verify->add_option("--L", v_L, "lattice size");
  verify->add_option("--seed", v_seed, "master RNG seed");
  verify->add_option("--threads", v_threads, "worker threads (report is thread-count independent)");
  verify->add_flag("--deterministic", v_det, "byte-stable output (elapsed_ms reported as 0)");
  verify->add_option("--format", v_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", v_out, "write the report to a file instead of stdout");

  // ---- sweep ----
  auto* sweep = app.add_subcommand(
      "sweep", "compare the two routes over a lambda grid (dips mark discrete couplings)");
  int s_n = 4, s_L = 2, s_points = 200;
  double s_min = 0.0, s_max = kPi;
  std::uint64_t s_seed = 1;
  std::string s_format = "csv", s_out;
  sweep->add_option("--n", s_n, "so(n) rank parameter")->required();
  sweep->add_option("--L", s_L, "lattice size");
  sweep->add_option("--points", s_points,
                    "grid resolution: lambda_k = min + (max-min)*k/points, k = 1..points-1");
  sweep->add_option("--min", s_min, "grid start (exclusive)");
  sweep->add_option("--max", s_max, "grid stop (exclusive); default pi");
  sweep->add_option("--seed", s_seed, "RNG seed for the rapidity set");
  sweep->add_option("--format", s_format, "csv or json")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--out", s_out, "write the report to a file instead of stdout");

  // ---- dump-r ----
  auto* dump = app.add_subcommand("dump-r", "dump the nonzero R-matrix entries at rapidity u");
  ParamFlags d_pf;
  add_param_flags(dump, d_pf);
  double d_ure = 0.5, d_uim = 0.0;
  std::string d_out;
  dump->add_option("--u", d_ure, "rapidity difference u (real part)");
  dump->add_option("--u-imag", d_uim, "rapidity difference u (imaginary part)");
  dump->add_option("--out", d_out, "write the report to a file instead of stdout");

  try {
    app.parse(argc, argv);
    if (z->parsed())
      return cmd_z(z_pf, z_L, z_x, z_y, z_random, z_seed, z_tol, z_format, z_out);
    if (verify->parsed())
      return cmd_verify(v_pf, v_L, v_seed, v_threads, v_det, v_format, v_out);
    if (sweep->parsed())
      return cmd_sweep(s_n, s_L, s_points, s_min, s_max, s_seed, s_format, s_out);
    if (dump->parsed()) return cmd_dump_r(d_pf, d_ure, d_uim, d_out);
    return 64;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 64;
  } catch (const dwsolve::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const dwsolve::BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

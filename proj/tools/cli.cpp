#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mll/error.hpp"
#include "mll/kernels.hpp"
#include "mll/lattice_theta.hpp"
#include "mll/sampling.hpp"
#include "mll/spectral.hpp"

namespace mll::cli {

namespace {

std::string format_g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<double> split_numbers(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "not a number: '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorCode::Parse, "not a number: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

RunConfig load_config(const std::string& path) {
  if (path.empty()) return RunConfig::defaults();
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
  } else {
    write_atomic(path, content);
  }
}

struct VerifyOpts {
  std::string config;
  std::string suite = "all";
  std::string json_path;
  unsigned long seed = 42;
};

int cmd_verify(const VerifyOpts& o, bool seed_given, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  const unsigned long seed = seed_given ? o.seed : cfg.seed.value_or(o.seed);
  const std::string json_path = o.json_path.empty() ? cfg.output_path : o.json_path;
  // Keep stdout parseable when the JSON report goes there.
  std::ostringstream discard;
  std::ostream& text = json_path == "-" ? discard : out;
  const std::vector<CheckResult> checks = run_suites(cfg, o.suite, seed, text);
  bool all_pass = true;
  char buf[96];
  for (const CheckResult& c : checks) {
    all_pass = all_pass && c.pass;
    text << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.tolerance > 0.0) {
      std::snprintf(buf, sizeof buf, "  value %.3e  tol %.1e", c.value, c.tolerance);
      text << buf;
    }
    if (!c.detail.empty()) text << "  " << c.detail;
    text << '\n';
  }
  text << (all_pass ? "all checks passed" : "some checks FAILED") << " (seed " << seed << ")\n";
  if (!json_path.empty()) emit(json_path, report_json(cfg, seed, checks).dump(2) + "\n", out);
  return all_pass ? kExitOk : kExitFail;
}

struct GridOpts {
  std::string config;
  int k = 0;
  std::string z0 = "0,0";
  double half_width = 2.0;
  int n = 41;
  std::string out;
};

int cmd_kernel_grid(const GridOpts& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  if (o.n < 3 || o.n % 2 == 0) throw Error(ErrorCode::Parse, "--n must be odd and at least 3");
  if (!(o.half_width > 0.0)) throw Error(ErrorCode::Parse, "--half-width must be positive");
  const Complex z0 = parse_complex(o.z0);
  const double h = 2.0 * o.half_width / (o.n - 1);
  std::string csv = "x,y,re,im,abs\n";
  for (int j = 0; j < o.n; ++j) {
    for (int i = 0; i < o.n; ++i) {
      const Complex w = z0 + Complex{-o.half_width + i * h, -o.half_width + j * h};
      const Complex v = kernel_eval(cfg.model, o.k, z0, w);
      csv += format_g17(w.real()) + ',' + format_g17(w.imag()) + ',' + format_g17(v.real()) + ',' +
             format_g17(v.imag()) + ',' + format_g17(std::abs(v)) + '\n';
    }
  }
  emit(o.out, csv, out);
  return kExitOk;
}

struct PolyOpts {
  double field = 1.0;
  int mmax = 1;
  int nmax = 1;
  std::string h0 = "0,0";
  std::string h1 = "0,0";
  bool json = false;
  std::string out;
};

int cmd_poly_table(const PolyOpts& o, std::ostream& out) {
  if (o.mmax < 0 || o.nmax < 0) throw Error(ErrorCode::Parse, "--mmax and --nmax must be non-negative");
  const Complex h0 = parse_complex(o.h0);
  const Complex h1 = parse_complex(o.h1);
  std::string text;
  Json table = Json::array();
  if (!o.json) text = "m,n,term_m,term_n,coeff_re,coeff_im\n";
  for (int m = 0; m <= o.mmax; ++m) {
    for (int n = 0; n <= o.nmax; ++n) {
      const WickFunction poly = generalized_hermite(o.field, h0, h1, m, n);
      if (o.json) {
        table.push_back({{"m", m}, {"n", n}, {"poly", to_json(poly)}});
        continue;
      }
      for (const auto& [t, c] : poly.coeffs()) {
        text += std::to_string(m) + ',' + std::to_string(n) + ',' + std::to_string(t.first) + ',' +
                std::to_string(t.second) + ',' + format_g17(c.real()) + ',' + format_g17(c.imag()) + '\n';
      }
    }
  }
  if (o.json) text = table.dump(2) + "\n";
  emit(o.out, text, out);
  return kExitOk;
}

struct DimOpts {
  std::string lattice = "1,0,0,1";
  double nu = M_PI - 1.0;
  double mu = 1.0;
  std::string alpha = "1,0";
  std::string beta = "0,0";
  std::string kind = "inner";
  int k = 0;
  int seeds = 0;  // 0: formula + 2
  int grid = 48;
  double svd_tol = 1e-6;
};

int cmd_dimension(const DimOpts& o, std::ostream& out) {
  const std::vector<double> w = split_numbers(o.lattice);
  if (w.size() != 4) throw Error(ErrorCode::Parse, "--lattice needs w1_re,w1_im,w2_re,w2_im");
  const Lattice lat({w[0], w[1]}, {w[2], w[3]});
  const GroupElement h(parse_complex(o.alpha), parse_complex(o.beta));
  if (o.kind != "inner" && o.kind != "conjugate") throw Error(ErrorCode::Parse, "--kind must be inner or conjugate");
  const ModelParams p(o.nu, o.mu, o.kind == "inner" ? EquivariantPair::inner(h) : EquivariantPair::conjugate(h));
  const double formula = dimension_formula(p, lat);
  const NontrivialityReport nt = nontriviality_test(p, lat);
  if (!nt.nontrivial) {
    out << "formula " << formula << ", refused: integrality condition fails, no nonzero mixed forms exist\n"
        << nt.summary() << '\n';
    return kExitFail;
  }
  const int seeds = o.seeds > 0 ? o.seeds : static_cast<int>(std::ceil(formula - 1e-9)) + 2;
  const DimensionReport rep = dimension_estimate(p, lat, o.k, seeds, o.grid, o.svd_tol);
  const bool pass = std::abs(formula - std::round(formula)) < 1e-9 && rep.rank == std::lround(formula);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", formula);
  out << "formula " << buf << ", estimated " << rep.rank << ", " << (pass ? "PASS" : "FAIL") << '\n';
  out << "singular values (relative):";
  for (double s : rep.singular_values) {
    std::snprintf(buf, sizeof buf, " %.3e", s);
    out << buf;
  }
  out << '\n';
  for (const std::string& warn : rep.warnings) out << "warning: " << warn << '\n';
  return pass ? kExitOk : kExitFail;
}

struct PeriodOpts {
  std::string config;
  int k = 0;
  int n = 0;
  double eps = 1e-10;
  int samples = 20;
  unsigned long seed = 42;
};

int cmd_periodize_check(const PeriodOpts& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  if (!cfg.lattice) throw Error(ErrorCode::Parse, "periodize-check needs a lattice in the config");
  const ModelParams& p = cfg.model;
  const PeriodizedForm f = periodize(p, *cfg.lattice, eigenfunction(p, o.k, o.n), o.eps);
  const SampledFunction fn = [&](Complex z) { return f(z); };
  Rng rng(o.seed);
  std::uniform_int_distribution<long> coord(-3, 3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const Complex gamma = cfg.lattice->point(coord(rng), coord(rng));
    worst = std::max(worst, functional_eq_residual(p, fn, gamma, Complex{u(rng), u(rng)}));
  }
  const double tol = cfg.tolerance("periodize");
  char buf[160];
  std::snprintf(buf, sizeof buf, "psi_{%d,%d}: radius %.3f, %zu terms, max residual %.3e (tol %.1e) %s\n", o.k, o.n,
                f.radius(), f.term_count(), worst, tol, worst <= tol ? "PASS" : "FAIL");
  out << buf;
  return worst <= tol ? kExitOk : kExitFail;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const std::vector<double> v = split_numbers(text);
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() == 2) return {v[0], v[1]};
  throw Error(ErrorCode::Parse, "expected re,im but got '" + text + "'");
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + tmp.string() + "'");
    f << content;
    f.close();
    if (!f) throw Error(ErrorCode::InvalidArgument, "write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed Landau level toolkit"};
  app.require_subcommand(1);

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("suite", vo.suite,
                     "all | susy | intertwine | chain | multiplier | cocycles | kernel | dimension | periodize")
      ->check(CLI::IsMember(
          {"all", "susy", "intertwine", "chain", "multiplier", "cocycles", "kernel", "dimension", "periodize"}));
  verify->add_option("--config", vo.config, "run configuration (JSON)");
  auto* seed_opt = verify->add_option("--seed", vo.seed, "seed for the randomized suites");
  verify->add_option("--json", vo.json_path, "write the JSON report here ('-' for stdout)");

  GridOpts go;
  auto* grid = app.add_subcommand("kernel-grid", "CSV of w -> K_k(z0, w) on a square box");
  grid->add_option("--config", go.config);
  grid->add_option("--k", go.k)->check(CLI::NonNegativeNumber);
  grid->add_option("--z0", go.z0, "re,im");
  grid->add_option("--half-width", go.half_width);
  grid->add_option("--n", go.n, "points per axis (odd)");
  grid->add_option("--out", go.out);

  PolyOpts po;
  auto* poly = app.add_subcommand("poly-table", "coefficients of the complex Hermite polynomials");
  poly->add_option("--B", po.field)->check(CLI::PositiveNumber);
  poly->add_option("--mmax", po.mmax);
  poly->add_option("--nmax", po.nmax);
  poly->add_option("--h0", po.h0, "re,im");
  poly->add_option("--h1", po.h1, "re,im");
  poly->add_flag("--json", po.json);
  poly->add_option("--out", po.out);

  DimOpts dopt;
  auto* dim = app.add_subcommand("dimension", "compare the dimension formula with the numerical rank");
  dim->add_option("--lattice", dopt.lattice, "w1_re,w1_im,w2_re,w2_im");
  dim->add_option("--nu", dopt.nu);
  dim->add_option("--mu", dopt.mu);
  dim->add_option("--alpha", dopt.alpha, "re,im");
  dim->add_option("--beta", dopt.beta, "re,im");
  dim->add_option("--kind", dopt.kind, "inner | conjugate");
  dim->add_option("--k", dopt.k)->check(CLI::NonNegativeNumber);
  dim->add_option("--seeds", dopt.seeds);
  dim->add_option("--grid", dopt.grid);
  dim->add_option("--svd-tol", dopt.svd_tol);

  PeriodOpts pco;
  auto* per = app.add_subcommand("periodize-check", "functional equation of a periodized eigenfunction");
  per->add_option("--config", pco.config);
  per->add_option("--k", pco.k)->check(CLI::NonNegativeNumber);
  per->add_option("--n", pco.n)->check(CLI::NonNegativeNumber);
  per->add_option("--eps", pco.eps)->check(CLI::PositiveNumber);
  per->add_option("--samples", pco.samples);
  per->add_option("--seed", pco.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(vo, seed_opt->count() > 0, out);
    if (grid->parsed()) return cmd_kernel_grid(go, out);
    if (poly->parsed()) return cmd_poly_table(po, out);
    if (dim->parsed()) return cmd_dimension(dopt, out);
    if (per->parsed()) return cmd_periodize_check(pco, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Parse ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace mll::cli

#include <cmath>
#include <cstdio>
#include <ostream>

#include "cli.hpp"
#include "mll/automorphy.hpp"
#include "mll/error.hpp"
#include "mll/kernels.hpp"
#include "mll/lattice_theta.hpp"
#include "mll/sampling.hpp"
#include "mll/spectral.hpp"

namespace mll::cli {

namespace {

CheckResult bounded(const std::string& name, double value, double tol, const std::string& detail = "") {
  return {name, value <= tol, value, tol, detail};
}

CheckResult failed(const std::string& name, const std::string& detail) {
  return {name, false, std::nan(""), 0.0, detail};
}

std::vector<CheckResult> susy_suite(const RunConfig& cfg, Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const WickFunction f = random_wick(rng, 6);
    const SusyResidual r = check_susy(cfg.model, f);
    worst = std::max({worst, r.annihilator_first, r.creator_first});
  }
  return {bounded("susy", worst, cfg.tolerance("susy"), "50 random Wick functions of degree <= 6")};
}

std::vector<CheckResult> intertwine_suite(const RunConfig& cfg, Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) worst = std::max(worst, check_intertwine(cfg.model, random_wick(rng, 6)));
  return {bounded("intertwine", worst, cfg.tolerance("intertwine"), "50 random Wick functions of degree <= 6")};
}

std::vector<CheckResult> chain_suite(const RunConfig& cfg, Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const GroupElement g = random_group_element(rng);
    const GroupElement gp = random_group_element(rng);
    worst = std::max(worst, check_chain_rule(cfg.model, g, gp, random_complex(rng, 2.0)));
  }
  return {bounded("chain_rule", worst, cfg.tolerance("chain_rule"), "1000 random (g, g', z)")};
}

std::vector<CheckResult> multiplier_suite(const RunConfig& cfg, Rng& rng) {
  std::vector<Complex> zs;
  for (int i = 0; i < 10; ++i) zs.push_back(random_complex(rng, 2.0));
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Complex gamma = cfg.lattice ? cfg.lattice->point(static_cast<long>(uniform(rng, -4.0, 4.0)),
                                                           static_cast<long>(uniform(rng, -4.0, 4.0)))
                                      : random_complex(rng, 3.0);
    worst = std::max(worst, check_multiplier_independence(cfg.model, gamma, zs));
  }
  return {bounded("multiplier", worst, cfg.tolerance("multiplier"), "100 shifts x 10 sample points")};
}

std::vector<CheckResult> cocycle_suite(const RunConfig& cfg, std::ostream& out, bool table) {
  const NontrivialityReport report = nontriviality_test(cfg.model, *cfg.lattice);
  if (table) {
    out << "gamma, gamma', phase/pi, nearest, deviation\n";
    char buf[192];
    for (const CocycleEntry& e : report.entries) {
      std::snprintf(buf, sizeof buf, "(%g%+gi), (%g%+gi), %.12g, %ld, %.3e\n", e.gamma.real(), e.gamma.imag(),
                    e.gamma_prime.real(), e.gamma_prime.imag(), e.phase_over_pi, e.nearest, e.deviation);
      out << buf;
    }
  }
  std::vector<CheckResult> res;
  res.push_back({"integrality", report.nontrivial, report.worst.deviation, NontrivialityReport::kIntegerTol,
                 report.summary()});
  res.push_back(bounded("pseudo_character", pseudo_character_check(cfg.model, *cfg.lattice),
                        cfg.tolerance("pseudo_character"), "word ball of radius 3"));
  return res;
}

std::vector<CheckResult> kernel_suite(const RunConfig& cfg, Rng& rng) {
  const ModelParams& p = cfg.model;
  const double field = magnetic_field(p);
  double diag = 0.0, herm = 0.0, inv = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int k = i % 4;
    const Complex z = random_complex(rng, 1.5);
    const Complex w = random_complex(rng, 1.5);
    diag = std::max(diag, std::abs(kernel_eval(p, k, z, z) - 2.0 * field / M_PI));
    herm = std::max(herm, std::abs(kernel_eval(p, k, z, w) - std::conj(kernel_eval(p, k, w, z))));
    inv = std::max(inv, kernel_invariance_residual(p, k, random_group_element(rng), z, w));
  }
  std::vector<CheckResult> res{bounded("kernel_diagonal", diag, 1e-12), bounded("kernel_hermitian", herm, 1e-12),
                               bounded("kernel_invariance", inv, 1e-12)};
  const Complex z = random_complex(rng, 0.5);
  const Complex u = random_complex(rng, 0.5);
  double worst = 0.0;
  try {
    for (int k = 0; k <= 1; ++k) {
      for (int j = 0; j <= 1; ++j) {
        QuadratureSpec q;
        q.center = 0.5 * (z + u);
        q.radius = idempotence_radius(field, k, j, z, u);
        worst = std::max(worst, kernel_idempotence_residual(p, k, j, z, u, q));
      }
    }
    res.push_back(bounded("kernel_idempotence", worst, cfg.tolerance("kernel"), "k, j <= 1, 160^2 points"));
  } catch (const Error& e) {
    res.push_back(failed("kernel_idempotence", e.what()));
  }
  res.push_back({"kernel_gaussian_sign", true, 0.0, 0.0, gaussian_sign_report(p, 0).summary()});
  return res;
}

std::vector<CheckResult> dimension_suite(const RunConfig& cfg) {
  try {
    const double formula = dimension_formula(cfg.model, *cfg.lattice);
    const int expected = static_cast<int>(std::lround(formula));
    const DimensionReport rep = dimension_estimate(cfg.model, *cfg.lattice, 0, expected + 2);
    char buf[128];
    std::snprintf(buf, sizeof buf, "formula %.12g, estimated %d", formula, rep.rank);
    const bool pass = rep.rank == expected && std::abs(formula - expected) < 1e-9;
    return {{"dimension", pass, static_cast<double>(rep.rank), formula, buf}};
  } catch (const Error& e) {
    return {failed("dimension", std::string("refused: ") + e.what())};
  }
}

std::vector<CheckResult> periodize_suite(const RunConfig& cfg, Rng& rng) {
  try {
    const ModelParams& p = cfg.model;
    const PeriodizedForm f = periodize(p, *cfg.lattice, eigenfunction(p, 0, 0), 1e-10);
    const SampledFunction fn = [&](Complex z) { return f(z); };
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Complex gamma = cfg.lattice->point(static_cast<long>(uniform(rng, -3.0, 3.0)),
                                               static_cast<long>(uniform(rng, -3.0, 3.0)));
      worst = std::max(worst, functional_eq_residual(p, fn, gamma, random_complex(rng, 2.0)));
    }
    return {bounded("functional_equation", worst, cfg.tolerance("periodize"), "psi_{0,0} periodized, eps 1e-10")};
  } catch (const Error& e) {
    return {failed("functional_equation", std::string("refused: ") + e.what())};
  }
}

}  // namespace

std::vector<CheckResult> run_suites(const RunConfig& cfg, const std::string& suite, unsigned long seed,
                                    std::ostream& out) {
  static const char* const kSuites[] = {"susy",    "intertwine", "chain",     "multiplier",
                                        "cocycles", "kernel",     "dimension", "periodize"};
  bool known = suite == "all";
  for (const char* s : kSuites) known = known || suite == s;
  if (!known) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");

  std::vector<CheckResult> all;
  auto take = [&](std::vector<CheckResult> r) { all.insert(all.end(), r.begin(), r.end()); };
  // Each suite gets its own stream so selecting one suite reproduces the
  // numbers it shows inside "all".
  auto rng_for = [&](int index) { return Rng(seed * 1000003ul + static_cast<unsigned long>(index)); };
  auto want = [&](const char* s) { return suite == "all" || suite == s; };

  if (want("susy")) { Rng r = rng_for(0); take(susy_suite(cfg, r)); }
  if (want("intertwine")) { Rng r = rng_for(1); take(intertwine_suite(cfg, r)); }
  if (want("chain")) { Rng r = rng_for(2); take(chain_suite(cfg, r)); }
  if (want("multiplier")) { Rng r = rng_for(3); take(multiplier_suite(cfg, r)); }
  if (want("kernel")) { Rng r = rng_for(4); take(kernel_suite(cfg, r)); }
  const bool lattice_suites = want("cocycles") || want("dimension") || want("periodize");
  if (lattice_suites && !cfg.lattice) {
    out << "no lattice configured; skipping lattice suites\n";
    return all;
  }
  if (want("cocycles")) take(cocycle_suite(cfg, out, suite == "cocycles"));
  if (want("dimension")) take(dimension_suite(cfg));
  if (want("periodize")) { Rng r = rng_for(5); take(periodize_suite(cfg, r)); }
  return all;
}

Json report_json(const RunConfig& cfg, unsigned long seed, const std::vector<CheckResult>& checks) {
  Json list = Json::array();
  bool all_pass = true;
  for (const CheckResult& c : checks) {
    all_pass = all_pass && c.pass;
    Json item{{"name", c.name}, {"pass", c.pass}, {"tolerance", c.tolerance}, {"detail", c.detail}};
    item["value"] = std::isfinite(c.value) ? Json(c.value) : Json(nullptr);
    list.push_back(item);
  }
  Json j{{"schema", 1}, {"seed", seed}, {"model", to_json(cfg.model)}, {"checks", list}, {"all_pass", all_pass}};
  j["lattice"] = cfg.lattice ? to_json(*cfg.lattice) : Json(nullptr);
  return j;
}

}  // namespace mll::cli

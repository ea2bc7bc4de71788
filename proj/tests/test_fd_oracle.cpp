#include <cmath>

#include "helpers.hpp"
#include "mll/fd_oracle.hpp"
#include "mll/sampling.hpp"
#include "mll/spectral.hpp"

using namespace mll;

namespace {

ModelParams inner_model(double nu, double mu, Complex alpha, Complex beta) {
  return ModelParams(nu, mu, EquivariantPair::inner(GroupElement(alpha, beta)));
}

GenericPair identity_pair() {
  GenericPair id;
  id.tau = [](Complex z) { return z; };
  id.dtau_dz = [](Complex) { return Complex{1.0}; };
  id.dtau_dzbar = [](Complex) { return Complex{}; };
  id.lap_tau = [](Complex) { return Complex{}; };
  id.rho = [](const GroupElement& g) { return g; };
  return id;
}

// tau = z + 0.1 z^2 conj(z); not equivariant, only used to exercise R.
GenericPair cubic_pair(bool with_laplacian) {
  GenericPair t = identity_pair();
  t.tau = [](Complex z) { return z + 0.1 * z * z * std::conj(z); };
  t.dtau_dz = [](Complex z) { return 1.0 + 0.2 * z * std::conj(z); };
  t.dtau_dzbar = [](Complex z) { return 0.1 * z * z; };
  if (with_laplacian) t.lap_tau = [](Complex z) { return 0.8 * z; };
  return t;
}

double interior_max_diff(const GridField& a, const std::function<Complex(Complex)>& ref) {
  double worst = 0.0;
  for (int j = 1; j < a.grid.n - 1; ++j) {
    for (int i = 1; i < a.grid.n - 1; ++i) worst = std::max(worst, std::abs(a.at(i, j) - ref(a.grid.point(i, j))));
  }
  return worst;
}

}  // namespace

TEST_CASE("grid validation") {
  CHECK_ERROR_CODE(Grid({}, 1.0, 7).validate(), ErrorCode::GridTooCoarse);
  CHECK_ERROR_CODE(Grid({}, 1.0, 10).validate(), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(Grid({}, 0.0, 11).validate(), ErrorCode::InvalidArgument);
  const Grid g{{1.0, -1.0}, 2.0, 9};
  CHECK(g.spacing() == doctest::Approx(0.5));
  check_close(g.point(0, 0), {-1.0, -3.0}, 1e-15);
  check_close(g.point(8, 8), {3.0, 1.0}, 1e-15);
  CHECK_FALSE(g.interior(0, 4));
  CHECK(g.interior(1, 7));
}

TEST_CASE("boundary of the operator output is NaN") {
  const ModelParams p = ModelParams::landau(1.0);
  const GridField lf = fd_apply_L(p, sample(Grid{{}, 1.0, 9}, eigenfunction(p, 0, 0)));
  CHECK(std::isnan(lf.at(0, 3).real()));
  CHECK(std::isnan(lf.at(8, 8).imag()));
  CHECK(std::isfinite(lf.at(4, 4).real()));
}

TEST_CASE("ground state maps to B times itself to second order") {
  const ModelParams p = inner_model(0.5, 1.0, unit_phase(0.4), {0.3, -0.6});
  const double B = magnetic_field(p);
  const WickFunction psi = eigenfunction(p, 0, 0);
  double last = 0.0;
  for (int n : {41, 81}) {
    const Grid g{{0.2, 0.1}, 2.0, n};
    const GridField lf = fd_apply_L(p, sample(g, psi));
    const double err = interior_max_diff(lf, [&](Complex z) { return B * wick_eval(psi, z); });
    CHECK(err < 0.05);
    if (last > 0.0) CHECK(last / err == doctest::Approx(4.0).epsilon(0.1));
    last = err;
  }
}

TEST_CASE("constant function gives nu^2 |z|^2 for the Landau model") {
  const double nu = 1.7;
  const ModelParams p = ModelParams::landau(nu);
  const GridField lf = fd_apply_L(p, sample(Grid{{}, 1.5, 21}, WickFunction::constant(1.0)));
  CHECK(interior_max_diff(lf, [&](Complex z) { return Complex{nu * nu * std::norm(z)}; }) < 1e-12);
}

TEST_CASE("generic identity pair matches the affine identity pair") {
  const ModelParams affine(0.8, 0.9, EquivariantPair::identity());
  const ModelParams generic(0.8, 0.9, EquivariantPair::generic(identity_pair()));
  Rng rng(kTestSeed);
  const WickFunction f = random_wick(rng, 3);
  const Grid g{{0.1, 0.3}, 1.0, 31};
  const GridField fa = sample(g, f);
  const GridField a = fd_apply_L(affine, fa);
  const GridField b = fd_apply_L(generic, fa);
  double worst = 0.0;
  for (int j = 1; j < g.n - 1; ++j) {
    for (int i = 1; i < g.n - 1; ++i) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("harmonic defect term is applied") {
  const double mu = 0.7;
  const ModelParams full(1.0, mu, EquivariantPair::generic(cubic_pair(true)));
  const ModelParams no_lap(1.0, mu, EquivariantPair::generic(cubic_pair(false)));
  const Grid g{{0.2, -0.1}, 1.0, 41};
  const auto f = [](Complex z) { return std::exp(-0.5 * std::norm(z)); };
  const GridField samples = sample(g, f);
  const GridField a = fd_apply_L(full, samples);
  const GridField b = fd_apply_L(no_lap, samples);
  for (int j = 1; j < g.n - 1; j += 7) {
    for (int i = 1; i < g.n - 1; i += 5) {
      const Complex z = g.point(i, j);
      const Complex expected = -0.25 * mu * harmonic_defect(full, z) * f(z);
      check_close(a.at(i, j) - b.at(i, j), expected, 1e-12);
    }
  }

  // Analytic oracle: f = e^{-|z|^2/2}, d_z f = -conj(z) f / 2, d_zbar f = -z f / 2,
  // d_z d_zbar f = (|z|^2 / 4 - 1/2) f.
  const double err = interior_max_diff(a, [&](Complex z) {
    const Complex s = s_function(full, z);
    const Complex fz = -0.5 * std::conj(z) * f(z);
    const Complex fzb = -0.5 * z * f(z);
    const Complex fzzb = (0.25 * std::norm(z) - 0.5) * f(z);
    return -fzzb - (s * fz - std::conj(s) * fzb) + (std::norm(s) - 0.25 * mu * harmonic_defect(full, z)) * f(z);
  });
  CHECK(err < 5e-3);
}

TEST_CASE("convergence order of the central stencil") {
  const ModelParams p = inner_model(0.6, 1.1, kI, {0.5, 0.0});
  const Grid g{{0.1, 0.2}, 1.5, 41};
  const double order = convergence_order(p, eigenfunction(p, 1, 1), g);
  CHECK(order >= 1.8);
  CHECK(order <= 2.2);
  CHECK(std::isinf(convergence_order(p, WickFunction::monomial(1, 0), g)));
  CHECK(std::isinf(convergence_order(p, WickFunction::monomial(0, 1, {0.5, 2.0}), g)));
  const double forward = convergence_order(p, eigenfunction(p, 1, 1), g, Stencil::ForwardFirstOrder);
  CHECK(forward == doctest::Approx(1.0).epsilon(0.2));
}

TEST_CASE("property: convergence order for random affine models") {
  Rng rng(kTestSeed + 1);
  for (int trial = 0; trial < 4; ++trial) {
    const ModelParams p = random_affine_model(rng, trial % 2 ? PairKind::Conjugate : PairKind::Inner);
    const int m = static_cast<int>(uniform(rng, 0, 3));
    const int n = static_cast<int>(uniform(rng, 0, 3));
    const double order = convergence_order(p, eigenfunction(p, m, n), Grid{{}, 1.0, 41});
    INFO("trial " << trial << " m " << m << " n " << n);
    CHECK(order >= 1.8);
    CHECK(order <= 2.2);
  }
}

TEST_CASE("eigen residual on a fine grid") {
  const ModelParams p = inner_model(0.5, 0.5, unit_phase(1.0), {0.4, 0.2});
  const Grid fine{{}, 2.0, 201};
  CHECK(fd_eigen_residual(p, 1, 2, fine) <= 5e-3);
  const double coarse_res = fd_eigen_residual(p, 1, 2, Grid{{}, 2.0, 101});
  CHECK(coarse_res / fd_eigen_residual(p, 1, 2, fine) == doctest::Approx(4.0).epsilon(0.15));
  CHECK(fd_eigen_residual(p, 1, 2, fine, landau_level(p, 2)) > 0.1);
}

#include "helpers.hpp"
#include "mll/kernels.hpp"
#include "mll/sampling.hpp"
#include "mll/spectral.hpp"

using namespace mll;

namespace {

ModelParams landau_like(double field, Complex alpha = 1.0, Complex beta = 0.0) {
  return ModelParams(0.4 * field, 0.6 * field, EquivariantPair::inner(GroupElement(alpha, beta)));
}

QuadratureSpec box_for(double field, int k, int j, Complex z, Complex u) {
  QuadratureSpec q;
  q.center = 0.5 * (z + u);
  q.radius = idempotence_radius(field, k, j, z, u);
  return q;
}

}  // namespace

TEST_CASE("psi phase examples") {
  const ModelParams p(0.5, 1.0, EquivariantPair::inner(GroupElement(1.0, 2.0)));
  CHECK(psi_phase(p, {0.3, 0.4}, {0.3, 0.4}) == 0.0);
  CHECK(psi_phase(ModelParams::landau(2.0), 1.0, kI) == 0.0);
  CHECK(psi_phase(p, kI, 0.0) == doctest::Approx(-4.0));
}

TEST_CASE("kernel values") {
  Rng rng(kTestSeed);
  const ModelParams p = random_affine_model(rng, PairKind::Conjugate);
  const double B = magnetic_field(p);
  const Complex z = random_complex(rng, 2.0);
  for (int k = 0; k <= 3; ++k) check_close(kernel_eval(p, k, z, z), 2.0 * B / M_PI, 1e-12);
  check_close(kernel_eval(ModelParams::landau(0.5), 0, 1.0, 0.0), std::exp(-0.5) / M_PI, 1e-15);
  CHECK_ERROR_CODE(kernel_eval(p, -1, z, z), ErrorCode::InvalidArgument);
}

TEST_CASE("property: Hermitian symmetry and gauge covariance") {
  Rng rng(kTestSeed + 1);
  for (int i = 0; i < 50; ++i) {
    const ModelParams p = random_affine_model(rng, i % 2 ? PairKind::Inner : PairKind::Conjugate);
    const ModelParams landau = ModelParams::landau(magnetic_field(p));
    const Complex z = random_complex(rng, 2.0), w = random_complex(rng, 2.0);
    const int k = i % 4;
    check_close(kernel_eval(p, k, z, w), std::conj(kernel_eval(p, k, w, z)), 1e-12);
    check_close(kernel_eval(p, k, z, w), unit_phase(-psi_phase(p, z, w)) * kernel_eval(landau, k, z, w), 1e-12);
  }
}

TEST_CASE("invariance under the group") {
  Rng rng(kTestSeed + 2);
  const ModelParams landau = ModelParams::landau(1.3);
  CHECK(kernel_invariance_residual(landau, 2, GroupElement::identity(), 0.5, kI) == 0.0);
  for (int i = 0; i < 50; ++i) {
    const Complex z = random_complex(rng, 2.0), w = random_complex(rng, 2.0);
    CHECK(kernel_invariance_residual(landau, i % 4, GroupElement::translation(random_complex(rng, 2.0)), z, w) <=
          1e-12);
    const ModelParams p = random_affine_model(rng, PairKind::Inner);
    CHECK(kernel_invariance_residual(p, i % 4, random_group_element(rng), z, w) <= 1e-12);
  }
}

TEST_CASE("quadrature rules integrate a Gaussian") {
  for (QuadratureRule rule : {QuadratureRule::Trapezoid, QuadratureRule::GaussLegendre}) {
    QuadratureSpec q;
    q.center = {0.2, -0.1};
    q.radius = 7.0;
    q.points_per_axis = 120;
    q.rule = rule;
    const Complex v = integrate(q, [](Complex w) { return Complex{std::exp(-std::norm(w - Complex{0.2, -0.1}))}; });
    CHECK(std::abs(v - M_PI) <= 1e-12);
  }
  QuadratureSpec bad;
  bad.points_per_axis = 8;
  CHECK_ERROR_CODE(bad.validate(), ErrorCode::InvalidArgument);
  bad.points_per_axis = 16;
  bad.radius = 0.0;
  CHECK_ERROR_CODE(bad.validate(), ErrorCode::InvalidArgument);
}

TEST_CASE("projector algebra by quadrature") {
  const ModelParams p = landau_like(1.0, kI, {0.3, 0.2});
  const Complex zero{};
  CHECK(kernel_idempotence_residual(p, 0, 0, zero, zero, box_for(1.0, 0, 0, zero, zero)) <= 1e-6);
  const Complex z{0.3, -0.2}, u{-0.4, 0.1};
  CHECK(kernel_idempotence_residual(p, 0, 1, z, u, box_for(1.0, 0, 1, z, u)) <= 1e-6);
  CHECK(kernel_idempotence_residual(p, 2, 2, z, z, box_for(1.0, 2, 2, z, z)) <= 1e-6);
  QuadratureSpec gl = box_for(1.0, 1, 1, z, u);
  gl.rule = QuadratureRule::GaussLegendre;
  CHECK(kernel_idempotence_residual(p, 1, 1, z, u, gl) <= 1e-6);
}

TEST_CASE("coarse quadrature is reported as under-resolved") {
  QuadratureSpec q;
  q.radius = 8.0;
  q.points_per_axis = 16;
  CHECK_ERROR_CODE(kernel_idempotence_residual(landau_like(M_PI), 1, 1, 0.0, 0.0, q),
                   ErrorCode::QuadratureUnderresolved);
}

TEST_CASE("Gaussian sign readings") {
  const GaussianSignReport r = gaussian_sign_report(landau_like(1.0), 0);
  CHECK(r.decaying.integrable);
  CHECK(r.decaying.mass_2r == doctest::Approx(2.0).epsilon(1e-6));
  CHECK_FALSE(r.growing.integrable);
  CHECK(r.summary().find("divergent") != std::string::npos);
}

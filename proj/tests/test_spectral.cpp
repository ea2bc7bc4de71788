#include <cmath>

#include "helpers.hpp"
#include "mll/kernels.hpp"
#include "mll/sampling.hpp"
#include "mll/spectral.hpp"

using namespace mll;

namespace {

ModelParams inner_model(double nu, double mu, Complex alpha, Complex beta) {
  return ModelParams(nu, mu, EquivariantPair::inner(GroupElement(alpha, beta)));
}

// H_{m+1,n} = (d_z - 2B conj(z)) H_{m,n}, independent of the Rodrigues path.
WickFunction hermite_by_recurrence(double field, int m, int n) {
  WickFunction h = WickFunction::monomial(n, 0);
  for (int k = 0; k < m; ++k) h = wick_dz(h) + wick_mul_poly(h, {{{0, 1}, -2.0 * field}});
  return h;
}

EquivariantPair generic_identity() {
  GenericPair id;
  id.tau = [](Complex z) { return z; };
  id.dtau_dz = [](Complex) { return Complex{1.0}; };
  id.dtau_dzbar = [](Complex) { return Complex{}; };
  id.lap_tau = [](Complex) { return Complex{}; };
  id.rho = [](const GroupElement& g) { return g; };
  return EquivariantPair::generic(id);
}

}  // namespace

TEST_CASE("ground state has eigenvalue B") {
  const ModelParams p = inner_model(0.4, 1.3, unit_phase(0.5), {0.7, -0.2});
  const WickFunction psi = eigenfunction(p, 0, 0);
  CHECK(wick_approx_eq(apply_L(p, psi), wick_scale(psi, magnetic_field(p)), 1e-12));
}

TEST_CASE("Landau levels for m, n <= 6") {
  const ModelParams p = inner_model(1.0, 2.0, kI, {0.5, 0.25});
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) CHECK(eigen_residual(p, eigenfunction(p, m, n), landau_level(p, m)) <= 1e-9);
  }
}

TEST_CASE("Landau operator on conj(z) e^{-nu|z|^2}") {
  const double nu = 0.8;
  const ModelParams p = ModelParams::landau(nu);
  const WickFunction f = WickFunction::monomial(0, 1, 1.0, Exponent{-nu, {}, {}, {}});
  CHECK(wick_approx_eq(apply_L(p, f), wick_scale(f, 3.0 * nu), 1e-12));
}

TEST_CASE("annihilator and creator examples") {
  const ModelParams landau = ModelParams::landau(1.3);
  CHECK(apply_A(landau, WickFunction::gaussian(-1.3)).is_zero());

  Rng rng(kTestSeed);
  const ModelParams p = random_affine_model(rng, PairKind::Conjugate);
  for (int n = 0; n <= 4; ++n) CHECK(apply_A(p, eigenfunction_by_ladder(p, 0, n)).max_coeff() <= 1e-12);

  const AffineS s = s_affine(p);
  const WickFunction up = apply_Atilde(p, WickFunction::constant(1.0));
  CHECK(approx_eq(up.coeff(0, 1), Complex{s.slope}));
  CHECK(approx_eq(up.coeff(0, 0), std::conj(s.offset)));
  CHECK(up.coeffs().size() == 2);
}

TEST_CASE("supersymmetric relations") {
  Rng rng(kTestSeed + 1);
  for (int i = 0; i < 20; ++i) {
    const ModelParams p = random_affine_model(rng, i % 2 ? PairKind::Inner : PairKind::Conjugate);
    const SusyResidual r = check_susy(p, random_wick(rng, 6));
    CHECK(r.annihilator_first <= 1e-9);
    CHECK(r.creator_first <= 1e-9);
  }
  const ModelParams p = random_affine_model(rng, PairKind::Inner);
  const SusyResidual zero = check_susy(p, WickFunction{});
  CHECK(zero.annihilator_first == 0.0);
  CHECK(zero.creator_first == 0.0);

  const WickFunction f = random_wick(rng, 4);
  const SusyResidual off = check_susy(p, f, 0.1);
  CHECK(off.annihilator_first == doctest::Approx(0.1 * f.max_coeff()).epsilon(1e-6));
  CHECK(off.creator_first == doctest::Approx(0.1 * f.max_coeff()).epsilon(1e-6));
}

TEST_CASE("Hermite polynomial examples") {
  const double B = 0.75;
  const WickFunction h0 = hermite(B, 0, 3);
  CHECK(h0.coeffs().size() == 1);
  CHECK(h0.coeff(3, 0) == Complex{1.0});
  const WickFunction h10 = hermite(B, 1, 0);
  CHECK(h10.coeffs().size() == 1);
  CHECK(approx_eq(h10.coeff(0, 1), Complex{-2.0 * B}));
  const WickFunction h11 = hermite(B, 1, 1);
  CHECK(h11.coeffs().size() == 2);
  CHECK(approx_eq(h11.coeff(0, 0), Complex{1.0}));
  CHECK(approx_eq(h11.coeff(1, 1), Complex{-2.0 * B}));
  CHECK_ERROR_CODE(hermite(0.0, 1, 1), ErrorCode::NonPositiveField);
}

TEST_CASE("property: Rodrigues agrees with the recurrence and has the expected leading term") {
  for (double B : {0.5, 1.0, M_PI}) {
    for (int m = 0; m <= 6; ++m) {
      for (int n = 0; n <= 6; ++n) {
        const WickFunction h = hermite(B, m, n);
        const WickFunction r = hermite_by_recurrence(B, m, n);
        CHECK(max_coeff_deviation(h, r) <= 1e-12 * std::max(1.0, r.max_coeff()));
        CHECK(h.degree() == m + n);
        CHECK(approx_eq(h.coeff(n, m), Complex{std::pow(-2.0 * B, m)}, 1e-12));
      }
    }
  }
}

TEST_CASE("generalized Hermite polynomials") {
  const double B = 1.2;
  const Complex h1{0.3, -0.8};
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(max_coeff_deviation(generalized_hermite(B, 0.0, 0.0, m, n), hermite(B, m, n)) <= 1e-12);
    }
  }
  const WickFunction g10 = generalized_hermite(B, {2.0, 1.0}, h1, 1, 0);
  CHECK(approx_eq(g10.coeff(0, 0), h1));
  CHECK(approx_eq(g10.coeff(0, 1), Complex{-2.0 * B}));
  CHECK(g10.coeffs().size() == 2);
  const WickFunction g03 = generalized_hermite(B, 1.0, h1, 0, 3);
  CHECK(g03.coeffs().size() == 1);
  CHECK(g03.coeff(3, 0) == Complex{1.0});
}

TEST_CASE("Laguerre polynomials") {
  CHECK(laguerre(0, 3.7) == 1.0);
  CHECK(laguerre(1, 2.0) == doctest::Approx(-1.0));
  CHECK(laguerre(2, 2.0) == doctest::Approx(1.0 - 4.0 + 2.0));
  for (int k = 0; k <= 12; ++k) {
    for (double x : {0.0, 0.3, 1.7, 5.0, 12.5}) {
      CHECK(laguerre(k, x) == doctest::Approx(std::laguerre(k, x)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("eigenfunction examples") {
  const ModelParams landau = ModelParams::landau(0.9);
  const WickFunction psi00 = eigenfunction(landau, 0, 0);
  CHECK(approx_eq(psi00.exponent(), Exponent{-0.9, {}, {}, {}}));
  CHECK(psi00.coeff(0, 0) == Complex{1.0});

  const ModelParams p = inner_model(1.0, 2.0, 1.0, 1.0);
  const WickFunction psi11 = eigenfunction(p, 1, 1);
  CHECK(landau_level(p, 1) == doctest::Approx(9.0));
  CHECK(approx_eq(psi11.coeff(0, 0), Complex{1.0}));
  CHECK(approx_eq(psi11.coeff(1, 1), Complex{-6.0}));
  CHECK(eigen_residual(p, psi11, 9.0) <= 1e-9);
}

TEST_CASE("ladder route equals the Rodrigues route up to the calibrated sign") {
  Rng rng(kTestSeed + 2);
  for (PairKind kind : {PairKind::Inner, PairKind::Conjugate}) {
    const ModelParams p = random_affine_model(rng, kind);
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const WickFunction ladder = eigenfunction_by_ladder(p, m, n);
        const WickFunction rodrigues = wick_scale(eigenfunction(p, m, n), ladder_sign(m));
        CHECK(max_coeff_deviation(ladder, rodrigues) <= 1e-9 * std::max(1.0, rodrigues.max_coeff()));
      }
    }
  }
  CHECK(kLadderSign == LadderSign::RodriguesMinus);
}

TEST_CASE("property: the annihilator lowers the level") {
  Rng rng(kTestSeed + 3);
  const ModelParams p = random_affine_model(rng, PairKind::Inner);
  for (int n = 0; n <= 3; ++n) {
    CHECK(apply_A(p, eigenfunction(p, 0, n)).max_coeff() <= 1e-10);
    for (int m = 1; m <= 4; ++m) {
      const WickFunction lowered = apply_A(p, eigenfunction(p, m, n));
      CHECK(eigen_residual(p, lowered, landau_level(p, m - 1)) <= 1e-9);
    }
  }
}

TEST_CASE("gauge transform") {
  const ModelParams landau = ModelParams::landau(1.1);
  const WickFunction f = WickFunction::monomial(2, 1, 1.0, Exponent{-1.1, {}, {}, {}});
  CHECK(wick_approx_eq(gauge_W(landau, f), f));

  Rng rng(kTestSeed + 4);
  const ModelParams p = random_affine_model(rng, PairKind::Conjugate);
  const WickFunction g = random_wick(rng, 3);
  CHECK(wick_approx_eq(gauge_W(p, gauge_W_inv(p, g)), g, 1e-12));

  const double B = magnetic_field(p);
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      const WickFunction w = gauge_W(p, eigenfunction(p, m, n));
      CHECK(approx_eq(w.exponent(), Exponent{-B, {}, {}, {}}, 1e-12));
      CHECK(max_coeff_deviation(w.polynomial_part(), hermite(B, m, n)) <= 1e-12);
    }
  }
}

TEST_CASE("intertwining") {
  Rng rng(kTestSeed + 5);
  for (int i = 0; i < 10; ++i) {
    const ModelParams p = random_affine_model(rng, i % 2 ? PairKind::Inner : PairKind::Conjugate);
    CHECK(check_intertwine(p, random_wick(rng, 5)) <= 1e-9);
  }
  CHECK(check_intertwine(ModelParams::landau(2.0), random_wick(rng, 5)) == 0.0);
  const ModelParams conj(3.0, 1.0, EquivariantPair::conjugate(GroupElement(kI, {1.0, 0.5})));
  CHECK(check_intertwine(conj, random_wick(rng, 6)) <= 1e-9);
}

TEST_CASE("magnetic translations") {
  Rng rng(kTestSeed + 6);
  const ModelParams p = random_affine_model(rng, PairKind::Inner);
  const WickFunction f = random_wick(rng, 4);
  CHECK(wick_approx_eq(magnetic_T(p, GroupElement::identity(), f), f));
  for (int i = 0; i < 10; ++i) {
    const ModelParams q = random_affine_model(rng, i % 2 ? PairKind::Inner : PairKind::Conjugate);
    const GroupElement g = i % 3 ? random_group_element(rng) : GroupElement::rotation(uniform(rng, -3.0, 3.0));
    CHECK(check_T_commutes(q, g, random_wick(rng, 5)) <= 1e-9);
  }
}

TEST_CASE("magnetic translations are unitary") {
  Rng rng(kTestSeed + 7);
  const ModelParams p = random_affine_model(rng, PairKind::Inner);
  const WickFunction f = eigenfunction(p, 1, 2);
  const GroupElement g(unit_phase(0.4), {0.8, -0.5});
  const WickFunction tf = magnetic_T(p, g, f);
  const double B = magnetic_field(p);
  auto norm_sq = [&](const WickFunction& h, Complex center) {
    QuadratureSpec q;
    q.center = center;
    q.radius = 9.0 / std::sqrt(B);
    q.points_per_axis = 200;
    return integrate(q, [&](Complex z) { return Complex{std::norm(wick_eval(h, z))}; }).real();
  };
  const double before = norm_sq(f, 0.0);
  const double after = norm_sq(tf, g.inverse().b());
  CHECK(std::abs(after - before) <= 1e-6 * before);
  CHECK(std::abs(before - wick_l2_norm_sq(f)) <= 1e-6 * before);
}

TEST_CASE("operator layer refuses generic pairs") {
  const ModelParams p(1.0, 0.5, generic_identity());
  CHECK_ERROR_CODE(apply_L(p, WickFunction::gaussian(-1.5)), ErrorCode::NotAffine);
  CHECK_ERROR_CODE(eigenfunction(p, 0, 0), ErrorCode::NotAffine);
}

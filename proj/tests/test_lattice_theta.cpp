#include "helpers.hpp"
#include "mll/lattice_theta.hpp"
#include "mll/sampling.hpp"
#include "mll/spectral.hpp"

using namespace mll;

namespace {

ModelParams inner_sigma(double sigma, Complex alpha = 1.0, Complex beta = 0.0) {
  return ModelParams(sigma - 1.0, 1.0, EquivariantPair::inner(GroupElement(alpha, beta)));
}

// Direct sum over lattice points with R < |gamma| <= r_far of the tail terms.
double direct_tail(double B, int degree, double zmax, double R, const Lattice& lat, double r_far) {
  double sum = 0.0;
  for (Complex g : lattice_points(lat, r_far)) {
    const double r = std::abs(g);
    if (r <= R) continue;
    const double excess = std::max(0.0, r - zmax);
    sum += std::pow(zmax + r, degree) * std::exp(-B * excess * excess);
  }
  return sum;
}

}  // namespace

TEST_CASE("lattice point enumeration") {
  const Lattice sq = Lattice::square();
  CHECK(lattice_points(sq, 0.0).size() == 1);
  CHECK(lattice_points(sq, 1.0).size() == 5);
  CHECK(lattice_points(sq, 1.5).size() == 9);
  const Lattice hex(1.0, unit_phase(M_PI / 3.0));
  CHECK(lattice_points(hex, 1.01).size() == 7);
  CHECK(hex.area() == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(word_ball(sq, 2).size() == 13);
  CHECK_ERROR_CODE(Lattice(1.0, 2.0), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(lattice_points(sq, -1.0), ErrorCode::InvalidArgument);
}

TEST_CASE("truncation radius against direct tail summation") {
  const Lattice sq = Lattice::square();
  const double R = truncation_radius(M_PI, 0, 1.0, 1e-10, sq);
  CHECK(R > 3.0);
  CHECK(R < 6.0);
  CHECK(direct_tail(M_PI, 0, 1.0, R, sq, R + 12.0) < 1e-10);
  // Slightly inside the returned radius the bound is no longer met.
  CHECK(truncation_tail_bound(M_PI, 0, 1.0, 0.99 * R, sq) >= 1e-10);

  for (int degree : {0, 3, 8}) {
    for (double zmax : {0.5, 2.0, 4.0}) {
      const double r = truncation_radius(1.0, degree, zmax, 1e-12, sq);
      CHECK(direct_tail(1.0, degree, zmax, r, sq, r + 20.0) < 1e-12);
    }
  }
  const Lattice skew({1.5, 0.0}, {0.4, 0.7});
  const double rs = truncation_radius(2.0, 2, 1.0, 1e-9, skew);
  CHECK(direct_tail(2.0, 2, 1.0, rs, skew, rs + 15.0) < 1e-9);
}

TEST_CASE("truncation radius edge cases") {
  const Lattice sq = Lattice::square();
  CHECK(truncation_radius(1.0, 0, 1.0, 1e6, sq) == 0.0);
  double last = 0.0;
  for (double eps : {1e-2, 1e-4, 1e-8, 1e-12, 1e-16}) {
    const double r = truncation_radius(1.0, 2, 1.0, eps, sq);
    CHECK(r > last);
    last = r;
  }
  CHECK_ERROR_CODE(truncation_radius(1.0, 0, 1.0, 0.0, sq), ErrorCode::InvalidArgument);
}

TEST_CASE("periodized ground state satisfies the functional equation") {
  const Lattice sq = Lattice::square();
  const ModelParams p = inner_sigma(M_PI);
  const PeriodizedForm f = periodize(p, sq, eigenfunction(p, 0, 0), 1e-10);
  const SampledFunction fn = [&](Complex z) { return f(z); };
  Rng rng(kTestSeed);
  for (int i = 0; i < 20; ++i) {
    const Complex gamma = sq.point(static_cast<long>(uniform(rng, -3, 4)), static_cast<long>(uniform(rng, -3, 4)));
    const Complex z = random_complex(rng, 2.0);
    CHECK(functional_eq_residual(p, fn, gamma, z) <= 1e-8);
  }
}

TEST_CASE("periodization refuses inconsistent cocycles and handles the zero seed") {
  const Lattice sq = Lattice::square();
  const ModelParams bad(0.5, 0.5, EquivariantPair::identity());
  CHECK_ERROR_CODE(periodize(bad, sq, eigenfunction(bad, 0, 0), 1e-10), ErrorCode::InconsistentCocycle);
  const ModelParams p = inner_sigma(M_PI);
  const PeriodizedForm zero = periodize(p, sq, WickFunction{}, 1e-10);
  CHECK(zero.is_zero());
  CHECK(zero({0.3, 0.7}) == Complex{});
  CHECK_ERROR_CODE(periodize(p, sq, WickFunction::gaussian(-1.0), 1e-10), ErrorCode::InvalidArgument);
}

TEST_CASE("property: periodized forms are fixed by the twisted shifts") {
  const Lattice sq = Lattice::square();
  Rng rng(kTestSeed + 1);
  for (const ModelParams& p : {inner_sigma(M_PI, kI, 0.5), inner_sigma(2.0 * M_PI, unit_phase(0.3), {0.2, -0.4})}) {
    const PeriodizedForm f = periodize(p, sq, eigenfunction(p, 1, 2), 1e-12);
    const SampledFunction g = [&](Complex z) { return f.landau_value(z); };
    for (Complex gamma : {Complex{1.0}, kI}) {
      for (int i = 0; i < 20; ++i) {
        const Complex z = random_complex(rng, 1.5);
        check_close(twisted_shift(p, gamma, g, z), g(z), 1e-8);
      }
    }
  }
}

TEST_CASE("property: twisted shifts compose as a group action under integrality") {
  const ModelParams p = inner_sigma(M_PI, unit_phase(1.1), {0.5, 0.5});
  const WickFunction seed = gauge_W(p, eigenfunction(p, 0, 1));
  const SampledFunction f = [&](Complex z) { return wick_eval(seed, z); };
  Rng rng(kTestSeed + 2);
  for (int i = 0; i < 20; ++i) {
    const Complex g = Lattice::square().point(static_cast<long>(uniform(rng, -2, 3)), 1);
    const Complex gp = Lattice::square().point(1, static_cast<long>(uniform(rng, -2, 3)));
    const Complex z = random_complex(rng, 1.0);
    const SampledFunction inner = [&](Complex w) { return twisted_shift(p, gp, f, w); };
    check_close(twisted_shift(p, g, inner, z), twisted_shift(p, g + gp, f, z), 1e-12);
  }
}

TEST_CASE("property: halving eps moves values by less than eps") {
  const Lattice sq = Lattice::square();
  const ModelParams p = inner_sigma(M_PI, kI, 0.5);
  const WickFunction seed = eigenfunction(p, 0, 3);
  const double eps = 1e-6;
  const PeriodizedForm a = periodize(p, sq, seed, eps);
  const PeriodizedForm b = periodize(p, sq, seed, eps / 2.0);
  Rng rng(kTestSeed + 3);
  for (int i = 0; i < 20; ++i) {
    const Complex z = random_complex(rng, 3.0);
    CHECK(std::abs(a(z) - b(z)) < eps);
  }
}

TEST_CASE("dimension formula") {
  const Lattice sq = Lattice::square();
  CHECK(dimension_formula(inner_sigma(M_PI), sq) == doctest::Approx(2.0));
  CHECK(dimension_formula(inner_sigma(2.0 * M_PI), sq) == doctest::Approx(4.0));
  const Lattice doubled(2.0, kI);
  CHECK(dimension_formula(inner_sigma(M_PI), doubled) == doctest::Approx(4.0));
}

TEST_CASE("dimension estimate matches the formula") {
  const Lattice sq = Lattice::square();
  const DimensionReport r1 = dimension_estimate(inner_sigma(M_PI), sq, 0, 6);
  CHECK(r1.rank == 2);
  CHECK(r1.warnings.empty());
  CHECK(dimension_estimate(inner_sigma(2.0 * M_PI), sq, 0, 6).rank == 4);
  CHECK(dimension_estimate(inner_sigma(M_PI), sq, 1, 6).rank == 2);
  CHECK(dimension_estimate(inner_sigma(M_PI, kI, 0.5), sq, 0, 4, 24).rank == 2);
}

TEST_CASE("dimension estimate refuses bad input") {
  const Lattice sq = Lattice::square();
  CHECK_ERROR_CODE(dimension_estimate(inner_sigma(M_PI + 0.1), sq, 0, 6), ErrorCode::InconsistentCocycle);
  CHECK_ERROR_CODE(dimension_estimate(inner_sigma(M_PI), sq, 0, 3), ErrorCode::InvalidArgument);
}

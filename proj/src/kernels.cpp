#include "mll/kernels.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <cstdio>
#include <vector>

#include "mll/automorphy.hpp"
#include "mll/error.hpp"
#include "mll/parallel.hpp"
#include "mll/simd.hpp"
#include "mll/spectral.hpp"

namespace mll {

namespace {

constexpr double kRefineTol = 1e-8;

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Rule1D trapezoid(double lo, double hi, int n) {
  Rule1D r;
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) {
    r.nodes.push_back(lo + i * h);
    r.weights.push_back((i == 0 || i == n - 1) ? 0.5 * h : h);
  }
  return r;
}

Rule1D gauss_legendre(double lo, double hi, int n) {
  const auto zeros = boost::math::legendre_p_zeros<double>(n);
  Rule1D r;
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  auto push = [&](double x) {
    const double dp = boost::math::legendre_p_prime(n, x);
    r.nodes.push_back(mid + half * x);
    r.weights.push_back(half * 2.0 / ((1.0 - x * x) * dp * dp));
  };
  // legendre_p_zeros returns the non-negative half.
  for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
    if (*it != 0.0) push(-*it);
  }
  for (double x : zeros) push(x);
  return r;
}

Rule1D make_rule(QuadratureRule rule, double lo, double hi, int n) {
  return rule == QuadratureRule::Trapezoid ? trapezoid(lo, hi, n) : gauss_legendre(lo, hi, n);
}

// Sum over rows of dot(a_row, b_row); a carries the weights. Rows are
// reduced in index order so the result is independent of the thread count.
Complex integrate_product(const QuadratureSpec& q, const std::function<Complex(Complex)>& fa,
                          const std::function<Complex(Complex)>& fb) {
  q.validate();
  const Rule1D rx = make_rule(q.rule, q.center.real() - q.radius, q.center.real() + q.radius, q.points_per_axis);
  const Rule1D ry = make_rule(q.rule, q.center.imag() - q.radius, q.center.imag() + q.radius, q.points_per_axis);
  const std::size_t n = rx.nodes.size();
  std::vector<Complex> rows(ry.nodes.size());
  parallel_for(ry.nodes.size(), [&](std::size_t j) {
    std::vector<Complex> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex w{rx.nodes[i], ry.nodes[j]};
      a[i] = rx.weights[i] * ry.weights[j] * fa(w);
      b[i] = fb(w);
    }
    rows[j] = simd::dot(a, b);
  });
  Complex total{};
  for (Complex r : rows) total += r;
  return total;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::InvalidArgument, "quadrature radius must be positive");
  }
  if (points_per_axis < 16) throw Error(ErrorCode::InvalidArgument, "quadrature needs at least 16 points per axis");
}

double psi_phase(const ModelParams& p, Complex z, Complex w) { return gauge_phase(p, z) - gauge_phase(p, w); }

Complex kernel_eval(const ModelParams& p, int k, Complex z, Complex w, GaussianReading reading) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "level index must be non-negative");
  const double field = magnetic_field(p);
  const double r2 = std::norm(z - w);
  const double sign = reading == GaussianReading::Decaying ? -1.0 : 1.0;
  const double phase = -psi_phase(p, z, w) + 2.0 * field * im_hermitian(z, w);
  return (2.0 * field / M_PI) * std::exp(sign * field * r2) * laguerre(k, 2.0 * field * r2) * unit_phase(phase);
}

double kernel_invariance_residual(const ModelParams& p, int k, const GroupElement& g, Complex z, Complex w) {
  const double field = magnetic_field(p);
  const Complex gz = g.act(z);
  const Complex gw = g.act(w);
  const double phase =
      -(psi_phase(p, z, w) - psi_phase(p, gz, gw)) + 2.0 * field * im_hermitian(z - w, g.inverse().b());
  return std::abs(kernel_eval(p, k, z, w) - unit_phase(phase) * kernel_eval(p, k, gz, gw));
}

Complex integrate(const QuadratureSpec& q, const std::function<Complex(Complex)>& fn) {
  return integrate_product(q, fn, [](Complex) { return Complex{1.0}; });
}

double idempotence_radius(double field, int k, int j, Complex z, Complex u) {
  // L_k(x) grows like x^k / k!; widen the box so the polynomial factor does
  // not lift the Gaussian tail above 1e-12.
  const double extra = std::sqrt((k + j) / field);
  return std::abs(z - u) / 2.0 + 7.0 / std::sqrt(field) + extra;
}

double kernel_idempotence_residual(const ModelParams& p, int k, int j, Complex z, Complex u, const QuadratureSpec& q) {
  auto left = [&](Complex w) { return kernel_eval(p, k, z, w); };
  auto right = [&](Complex w) { return kernel_eval(p, j, w, u); };
  const Complex coarse = integrate_product(q, left, right);
  QuadratureSpec fine = q;
  fine.points_per_axis = 2 * q.points_per_axis;
  const Complex refined = integrate_product(fine, left, right);
  const double change = std::abs(refined - coarse);
  if (change > kRefineTol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "doubling to %d points per axis changed the integral by %.3e",
                  fine.points_per_axis, change);
    throw Error(ErrorCode::QuadratureUnderresolved, buf);
  }
  const Complex expected = (k == j) ? kernel_eval(p, k, z, u) : Complex{};
  return std::abs(refined - expected);
}

std::string GaussianSignReport::summary() const {
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "exp(-B|z-w|^2): %s (mass %.6g -> %.6g); exp(+B|z-w|^2): %s (mass %.6g -> %.6g)",
                decaying.integrable ? "integrable" : "divergent", decaying.mass_r, decaying.mass_2r,
                growing.integrable ? "integrable" : "divergent", growing.mass_r, growing.mass_2r);
  return buf;
}

GaussianSignReport gaussian_sign_report(const ModelParams& p, int k, double r) {
  auto verdict = [&](GaussianReading reading) {
    // Radial mass 2 pi int_0^R |K(0, t)| t dt by the trapezoid rule with a
    // step shared by both radii, so the difference is the tail alone.
    const double h = r / 4000.0;
    auto mass = [&](double radius) {
      const int n = static_cast<int>(std::lround(radius / h));
      double sum = 0.0;
      for (int i = 0; i <= n; ++i) {
        const double t = i * h;
        const double f = std::abs(kernel_eval(p, k, Complex{}, Complex{t, 0.0}, reading)) * t;
        sum += (i == 0 || i == n) ? 0.5 * f : f;
      }
      return 2.0 * M_PI * h * sum;
    };
    ReadingVerdict v{reading, false, mass(r), mass(2.0 * r)};
    v.integrable = std::isfinite(v.mass_2r) && std::abs(v.mass_2r - v.mass_r) <= 1e-8 * std::max(1.0, v.mass_r);
    return v;
  };
  return {verdict(GaussianReading::Decaying), verdict(GaussianReading::Growing)};
}

}  // namespace mll

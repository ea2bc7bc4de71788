#include "mll/lattice_theta.hpp"

#include <Eigen/SVD>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cstdio>
#include <limits>

#include "mll/error.hpp"
#include "mll/parallel.hpp"
#include "mll/simd.hpp"
#include "mll/spectral.hpp"

namespace mll {

namespace {

constexpr double kCocycleTol = 1e-9;

// Envelope g(r) = (zmax + r)^d e^{-B max(0, r - zmax)^2}; it increases up to
// r_peak = sqrt(zmax^2 + d/(2B)) and decreases after, so the decreasing
// majorant is g(max(r, r_peak)).
struct Envelope {
  double field;
  int degree;
  double zmax;

  double g(double r) const {
    const double excess = std::max(0.0, r - zmax);
    // Log form: far out the power overflows long before the Gaussian underflows.
    const double log_poly = degree == 0 ? 0.0 : degree * std::log(zmax + r);
    return std::exp(log_poly - field * excess * excess);
  }
  double peak() const { return std::sqrt(zmax * zmax + degree / (2.0 * field)); }
  double majorant(double r) const { return g(std::max(r, peak())); }
};

void check_field(double field) {
  if (!(field > 0.0)) throw Error(ErrorCode::NonPositiveField, "magnetic field must be positive");
}

std::string cocycle_message(const ModelParams& p, const Lattice& lat, double deviation) {
  const NontrivialityReport report = nontriviality_test(p, lat);
  char buf[96];
  std::snprintf(buf, sizeof buf, "pseudo-character deviation %.3e; ", deviation);
  return std::string(buf) + "cocycle phase/pi not integral, the form space is trivial (" + report.summary() + ")";
}

}  // namespace

double truncation_tail_bound(double field, int poly_degree, double zmax, double radius, const Lattice& lat) {
  check_field(field);
  if (poly_degree < 0 || zmax < 0.0 || radius < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "degree, zmax and radius must be non-negative");
  }
  const Envelope env{field, poly_degree, zmax};
  const double d = lat.cell_diameter();
  const double area = lat.area();
  // Stieltjes bound: sum_{|gamma| > R} h(|gamma|) <= N(R) h(R) + int_R^inf N'(r) h(r) dr
  // with N(r) = pi (r + D)^2 / area and h the decreasing majorant.
  const double peak = env.peak();
  double integral = 0.0;
  if (radius < peak) {
    const double a = radius + d;
    const double b = peak + d;
    integral += 0.5 * (b * b - a * a) * env.g(peak);
  }
  const double start = std::max(radius, peak);
  boost::math::quadrature::exp_sinh<double> quad;
  integral += quad.integrate([&](double t) { return (start + t + d) * env.g(start + t); }, 0.0,
                             std::numeric_limits<double>::infinity());
  return M_PI * (radius + d) * (radius + d) * env.majorant(radius) / area + 2.0 * M_PI * integral / area;
}

double truncation_radius(double field, int poly_degree, double zmax, double eps, const Lattice& lat) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  auto bound = [&](double r) { return truncation_tail_bound(field, poly_degree, zmax, r, lat); };
  if (bound(0.0) < eps) return 0.0;
  double lo = 0.0;
  double hi = std::max(1.0, zmax);
  while (bound(hi) >= eps) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw Error(ErrorCode::InvalidArgument, "truncation radius diverges");
  }
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    (bound(mid) < eps ? hi : lo) = mid;
  }
  return hi;
}

Complex PeriodizedForm::nearest_lattice_point(Complex v) const {
  // v = x w1 + y w2; Im(conj(w1) v) = y Im(conj(w1) w2), Im(conj(w2) v) = x Im(conj(w2) w1).
  const Complex w1 = lat_.w1();
  const Complex w2 = lat_.w2();
  const double x = im_hermitian(v, w2) / im_hermitian(w1, w2);
  const double y = im_hermitian(v, w1) / im_hermitian(w2, w1);
  return lat_.point(std::lround(x), std::lround(y));
}

Complex PeriodizedForm::landau_value(Complex z) const {
  if (seed_.is_zero()) return {};
  // Re-center the sum on the lattice point nearest to -z; the truncation
  // radius was computed for |z + gamma_c| within one cell.
  const Complex center = nearest_lattice_point(-z);
  Complex sum{};
  for (Complex delta : offsets_) {
    const Complex gamma = center + delta;
    const Complex weight = std::conj(multiplier_chi(p_, gamma)) * unit_phase(-2.0 * field_ * im_hermitian(z, gamma));
    sum += weight * wick_eval(seed_, z + gamma);
  }
  return sum;
}

Complex PeriodizedForm::operator()(Complex z) const {
  return unit_phase(-gauge_phase(p_, z)) * landau_value(z);
}

PeriodizedForm periodize(const ModelParams& p, const Lattice& lat, const WickFunction& seed, double eps) {
  const double field = magnetic_field(p);
  const double deviation = pseudo_character_check(p, lat);
  if (deviation > kCocycleTol) throw Error(ErrorCode::InconsistentCocycle, cocycle_message(p, lat, deviation));
  PeriodizedForm form(p, lat);
  form.field_ = field;
  if (seed.is_zero()) return form;
  if (!approx_eq(seed.exponent().a, -field, 1e-12)) {
    throw Error(ErrorCode::InvalidArgument, "seed Gaussian coefficient must equal -B");
  }
  form.seed_ = gauge_W(p, seed);
  // |W seed(w)| <= |c|_1 (1 + |w|)^deg e^{-B|w - u0|^2 + |kappa|^2/(4B) + Re d}, kappa = b + conj(c).
  const Exponent& e = form.seed_.exponent();
  const Complex kappa = e.b + std::conj(e.c);
  const double u0 = std::abs(kappa) / (2.0 * field);
  const double scale = form.seed_.l1_norm() * std::exp(std::norm(kappa) / (4.0 * field) + e.d.real());
  const double zmax = lat.cell_diameter() + 2.0 * u0 + 1.0;
  form.radius_ = truncation_radius(field, std::max(form.seed_.degree(), 0), zmax, eps / scale, lat);
  form.offsets_ = lattice_points(lat, form.radius_);
  return form;
}

Complex twisted_shift(const ModelParams& p, Complex gamma, const SampledFunction& f, Complex z) {
  const double field = magnetic_field(p);
  return std::conj(multiplier_chi(p, gamma)) * unit_phase(-2.0 * field * im_hermitian(z, gamma)) * f(z + gamma);
}

double dimension_formula(const ModelParams& p, const Lattice& lat) {
  return 2.0 * magnetic_field(p) / M_PI * lat.area();
}

DimensionReport dimension_estimate(const ModelParams& p, const Lattice& lat, int k, int n_seeds, int grid_points,
                                   double svd_tol) {
  DimensionReport report;
  report.formula = dimension_formula(p, lat);
  const NontrivialityReport nt = nontriviality_test(p, lat);
  if (!nt.nontrivial) {
    throw Error(ErrorCode::InconsistentCocycle, "refusing to estimate: " + nt.summary());
  }
  if (n_seeds < report.formula + 2.0) {
    throw Error(ErrorCode::InvalidArgument, "n_seeds must be at least the formula value plus 2");
  }
  if (k < 0 || grid_points < 4 || !(svd_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "invalid level, grid size or SVD tolerance");
  }

  std::vector<PeriodizedForm> forms;
  for (int n = 0; n < n_seeds; ++n) {
    const WickFunction seed = eigenfunction(p, k, n);
    const WickFunction unit = wick_scale(seed, 1.0 / std::sqrt(wick_l2_norm_sq(seed)));
    forms.push_back(periodize(p, lat, unit, 1e-12));
  }

  const std::size_t npts = static_cast<std::size_t>(grid_points) * grid_points;
  std::vector<std::vector<Complex>> samples(forms.size(), std::vector<Complex>(npts));
  parallel_for(npts, [&](std::size_t idx) {
    const double s = (static_cast<double>(idx % grid_points) + 0.5) / grid_points;
    const double t = (static_cast<double>(idx / grid_points) + 0.5) / grid_points;
    const Complex z = s * lat.w1() + t * lat.w2();
    for (std::size_t a = 0; a < forms.size(); ++a) samples[a][idx] = forms[a](z);
  });

  const double cell = lat.area() / static_cast<double>(npts);
  const Eigen::Index m = static_cast<Eigen::Index>(forms.size());
  Eigen::MatrixXcd gram(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = a; b < m; ++b) {
      const Complex v = cell * simd::dot_conj(samples[a], samples[b]);
      gram(a, b) = v;
      gram(b, a) = std::conj(v);
    }
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(gram).singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double rel = smax > 0.0 ? sv(i) / smax : 0.0;
    report.singular_values.push_back(rel);
    if (rel > svd_tol) ++report.rank;
    if (rel > svd_tol / 10.0 && rel < svd_tol * 10.0) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "singular value %ld (%.3e) within x10 of the threshold %.1e",
                    static_cast<long>(i), rel, svd_tol);
      report.warnings.emplace_back(buf);
    }
  }
  return report;
}

}  // namespace mll

#pragma once

// Periodization of Landau-level eigenfunctions into mixed automorphic forms
// and numerical checks of the eigenspace dimension.
//
// Weight of the lattice sum. Write W for the gauge transform e^{i phi} and
// chi for the multiplier. For a lattice vector gamma define the twisted shift
//
//   (U_gamma f)(z) = conj(chi(gamma)) e^{-2iB Im<z, gamma>} f(z + gamma).
//
// Composing two shifts gives
//
//   U_gamma U_gamma' = c(gamma, gamma') U_{gamma + gamma'},
//   c(gamma, gamma') = chi(gamma + gamma') conj(chi(gamma) chi(gamma')) e^{-2iB Im<gamma, gamma'>},
//
// so gamma -> U_gamma is a group action exactly when c = 1, i.e. when the
// pseudo-character identity chi(gamma + gamma') = e^{2iB Im<gamma, gamma'>} chi(gamma) chi(gamma')
// holds. In that case G = sum_gamma U_gamma (W seed) is U-invariant, i.e.
//
//   G(z + gamma) = chi(gamma) e^{2iB Im<z, gamma>} G(z),
//
// and F = W^{-1} G satisfies F(z + gamma) = conj(J(gamma, z)) F(z), because
// e^{-i(phi(z + gamma) - phi(z))} chi(gamma) e^{2iB Im<z, gamma>} is the
// conjugate automorphy factor (the z-independence of chi^ restated).

#include <string>
#include <vector>

#include "mll/automorphy.hpp"
#include "mll/lattice.hpp"
#include "mll/model.hpp"
#include "mll/wick.hpp"

namespace mll {

/// Smallest R with
///
///   sum_{gamma in lat, |gamma| > R} (zmax + |gamma|)^degree e^{-B max(0, |gamma| - zmax)^2} < eps,
///
/// using the counting bound #{|gamma| <= r} <= pi (r + D)^2 / area with D the
/// cell diameter. Returns 0 when the whole sum is already below eps.
double truncation_radius(double field, int poly_degree, double zmax, double eps, const Lattice& lat);

/// The bound used by truncation_radius, exposed for tests.
double truncation_tail_bound(double field, int poly_degree, double zmax, double radius, const Lattice& lat);

class PeriodizedForm {
 public:
  /// The mixed form F = W^{-1} G.
  Complex operator()(Complex z) const;
  /// The Landau-gauge sum G.
  Complex landau_value(Complex z) const;

  double radius() const { return radius_; }
  std::size_t term_count() const { return offsets_.size(); }
  bool is_zero() const { return seed_.is_zero(); }

 private:
  friend PeriodizedForm periodize(const ModelParams& p, const Lattice& lat, const WickFunction& seed, double eps);

  PeriodizedForm(ModelParams p, Lattice lat) : p_(std::move(p)), lat_(lat) {}

  Complex nearest_lattice_point(Complex v) const;

  ModelParams p_;
  Lattice lat_;
  WickFunction seed_;  // W applied to the user seed
  double field_ = 0.0;
  double radius_ = 0.0;
  std::vector<Complex> offsets_;
};

/// Throws InconsistentCocycle when the pseudo-character deviation on the
/// word ball exceeds 1e-9, and InvalidArgument unless the seed's Gaussian
/// coefficient equals -B. The truncation is chosen so that every evaluation
/// is within eps of the full series.
PeriodizedForm periodize(const ModelParams& p, const Lattice& lat, const WickFunction& seed, double eps);

/// conj(chi(gamma)) e^{-2iB Im<z, gamma>} f(z + gamma)
Complex twisted_shift(const ModelParams& p, Complex gamma, const SampledFunction& f, Complex z);

/// (2B/pi) area
double dimension_formula(const ModelParams& p, const Lattice& lat);

struct DimensionReport {
  double formula = 0.0;
  int rank = 0;
  std::vector<double> singular_values;  // divided by the largest
  std::vector<std::string> warnings;
};

/// Numerical rank of the Gram matrix of the periodized seeds psi_{k,n},
/// n < n_seeds, each normalized in L^2(C), sampled at cell midpoints of a
/// grid_points x grid_points subdivision of the fundamental parallelogram.
/// Throws InconsistentCocycle when integrality fails and InvalidArgument
/// unless n_seeds >= formula + 2.
DimensionReport dimension_estimate(const ModelParams& p, const Lattice& lat, int k, int n_seeds, int grid_points = 48,
                                   double svd_tol = 1e-6);

}  // namespace mll

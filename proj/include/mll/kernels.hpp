#pragma once

// Eigenprojector kernels of the Landau levels in the mixed model:
//
//   K_k(z, w) = (2B/pi) e^{-i psi(z, w)} e^{2iB Im<z, w>} e^{-B|z - w|^2} L_k(2B|z - w|^2)
//
// with psi(z, w) = phi(z) - phi(w). Projector algebra is checked by 2-D
// quadrature over a square.

#include <functional>
#include <string>

#include "mll/complex.hpp"
#include "mll/group.hpp"
#include "mll/model.hpp"

namespace mll {

enum class QuadratureRule { Trapezoid, GaussLegendre };

struct QuadratureSpec {
  Complex center{};
  double radius = 8.0;  // half-width of the square
  int points_per_axis = 160;
  QuadratureRule rule = QuadratureRule::Trapezoid;

  /// Throws InvalidArgument unless radius > 0 and points_per_axis >= 16.
  void validate() const;
};

/// psi(z, w) = phi(z) - phi(w). Throws NotAffine.
double psi_phase(const ModelParams& p, Complex z, Complex w);

/// Sign of the Gaussian factor. The decaying reading is the one used
/// everywhere; the growing reading exists only for the integrability report.
enum class GaussianReading { Decaying, Growing };

Complex kernel_eval(const ModelParams& p, int k, Complex z, Complex w,
                    GaussianReading reading = GaussianReading::Decaying);

/// |K(z, w) - e^{-i(psi(z, w) - psi(g.z, g.w))} e^{2iB Im<z - w, g^{-1}.0>} K(g.z, g.w)|
double kernel_invariance_residual(const ModelParams& p, int k, const GroupElement& g, Complex z, Complex w);

/// Integral of fn over the square described by q.
Complex integrate(const QuadratureSpec& q, const std::function<Complex(Complex)>& fn);

/// Smallest radius for which the Gaussian tail of K_k(z, .) K_j(., u) is
/// negligible: |z - u|/2 + 7/sqrt(B) plus a margin for the Laguerre factors.
double idempotence_radius(double field, int k, int j, Complex z, Complex u);

/// |int K_k(z, w) K_j(w, u) dw - delta_kj K_k(z, u)|. The integral is
/// repeated with twice the points per axis; a change above 1e-8 throws
/// QuadratureUnderresolved.
double kernel_idempotence_residual(const ModelParams& p, int k, int j, Complex z, Complex u, const QuadratureSpec& q);

struct ReadingVerdict {
  GaussianReading reading;
  bool integrable;
  double mass_r;   // int |K(z0, w)| over |w - z0| <= r
  double mass_2r;  // same over 2r
};

struct GaussianSignReport {
  ReadingVerdict decaying;
  ReadingVerdict growing;
  std::string summary() const;
};

/// Compares the radial mass of |K_k(0, .)| on discs of radius r and 2r for
/// both signs of the Gaussian. A reading is integrable when the mass
/// stabilizes to 1e-8 relative.
GaussianSignReport gaussian_sign_report(const ModelParams& p, int k, double r = 6.0);

}  // namespace mll

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace mll {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr Complex kI{0.0, 1.0};

/// |x - y| <= tol * max(1, |x|, |y|)
inline bool approx_eq(Complex x, Complex y, double tol = kDefaultTol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

inline bool approx_eq(double x, double y, double tol = kDefaultTol) {
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Hermitian product <z, w> = z * conj(w).
inline Complex hermitian(Complex z, Complex w) { return z * std::conj(w); }

/// Im<z, w>.
inline double im_hermitian(Complex z, Complex w) { return std::imag(z * std::conj(w)); }

/// e^{i theta}
inline Complex unit_phase(double theta) { return {std::cos(theta), std::sin(theta)}; }

}  // namespace mll

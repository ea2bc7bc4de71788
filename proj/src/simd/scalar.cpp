#include "kernels.hpp"

namespace mll::simd::scalar {

Complex dot(const Complex* a, const Complex* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

Complex dot_conj(const Complex* a, const Complex* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

void stencil_row(const StencilRow& row) {
  const double inv_2h = 0.5 / row.h;
  const double inv_h2 = 1.0 / (row.h * row.h);
  for (std::size_t i = 1; i + 1 < row.n; ++i) {
    const Complex f = row.mid[i];
    const Complex fx = (row.mid[i + 1] - row.mid[i - 1]) * inv_2h;
    const Complex fy = (row.up[i] - row.down[i]) * inv_2h;
    const Complex lap = (row.mid[i + 1] + row.mid[i - 1] + row.up[i] + row.down[i] - 4.0 * f) * inv_h2;
    const Complex drift = row.s[i].real() * fy - row.s[i].imag() * fx;
    const Complex vf{row.v[i].real() * f.real() - row.v[i].imag() * f.imag(),
                     row.v[i].real() * f.imag() + row.v[i].imag() * f.real()};
    row.out[i] = -0.25 * lap + Complex{-drift.imag(), drift.real()} + vf;
  }
}

}  // namespace mll::simd::scalar

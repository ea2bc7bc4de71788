// One complex number per 128-bit register.

#include <arm_neon.h>

#include "kernels.hpp"

namespace mll::simd::neon {

namespace {

inline float64x2_t load1(const Complex* p) { return vld1q_f64(reinterpret_cast<const double*>(p)); }
inline Complex to_complex(float64x2_t v) { return {vgetq_lane_f64(v, 0), vgetq_lane_f64(v, 1)}; }
inline float64x2_t dup_re(float64x2_t v) { return vdupq_laneq_f64(v, 0); }
inline float64x2_t dup_im(float64x2_t v) { return vdupq_laneq_f64(v, 1); }
inline float64x2_t swap_ri(float64x2_t v) { return vextq_f64(v, v, 1); }

}  // namespace

Complex dot(const Complex* a, const Complex* b, std::size_t n) {
  float64x2_t acc_r = vdupq_n_f64(0.0);
  float64x2_t acc_i = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t va = load1(a + k);
    const float64x2_t vb = load1(b + k);
    acc_r = vfmaq_f64(acc_r, va, dup_re(vb));
    acc_i = vfmaq_f64(acc_i, va, dup_im(vb));
  }
  const Complex r = to_complex(acc_r);
  const Complex i = to_complex(acc_i);
  return {r.real() - i.imag(), i.real() + r.imag()};
}

Complex dot_conj(const Complex* a, const Complex* b, std::size_t n) {
  float64x2_t acc_r = vdupq_n_f64(0.0);
  float64x2_t acc_i = vdupq_n_f64(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t va = load1(a + k);
    const float64x2_t vb = load1(b + k);
    acc_r = vfmaq_f64(acc_r, va, dup_re(vb));
    acc_i = vfmaq_f64(acc_i, va, dup_im(vb));
  }
  const Complex r = to_complex(acc_r);
  const Complex i = to_complex(acc_i);
  return {r.real() + i.imag(), i.real() - r.imag()};
}

void stencil_row(const StencilRow& row) {
  const float64x2_t inv_2h = vdupq_n_f64(0.5 / row.h);
  const float64x2_t inv_h2 = vdupq_n_f64(1.0 / (row.h * row.h));
  const float64x2_t neg_re = {-1.0, 1.0};
  for (std::size_t i = 1; i + 1 < row.n; ++i) {
    const float64x2_t f = load1(row.mid + i);
    const float64x2_t right = load1(row.mid + i + 1);
    const float64x2_t left = load1(row.mid + i - 1);
    const float64x2_t up = load1(row.up + i);
    const float64x2_t down = load1(row.down + i);
    const float64x2_t fx = vmulq_f64(vsubq_f64(right, left), inv_2h);
    const float64x2_t fy = vmulq_f64(vsubq_f64(up, down), inv_2h);
    const float64x2_t sum4 = vaddq_f64(vaddq_f64(right, left), vaddq_f64(up, down));
    const float64x2_t lap = vmulq_f64(vfmsq_f64(sum4, vdupq_n_f64(4.0), f), inv_h2);
    const float64x2_t s = load1(row.s + i);
    const float64x2_t drift = vfmsq_f64(vmulq_f64(dup_re(s), fy), dup_im(s), fx);
    const float64x2_t i_drift = vmulq_f64(swap_ri(drift), neg_re);
    const float64x2_t v = load1(row.v + i);
    // v f = [vr fr - vi fi, vr fi + vi fr]
    const float64x2_t vf = vfmaq_f64(vmulq_f64(dup_re(v), f), vmulq_f64(dup_im(v), swap_ri(f)), neg_re);
    const float64x2_t out = vaddq_f64(vfmaq_f64(i_drift, vdupq_n_f64(-0.25), lap), vf);
    vst1q_f64(reinterpret_cast<double*>(row.out + i), out);
  }
}

}  // namespace mll::simd::neon

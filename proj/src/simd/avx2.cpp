// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels.hpp"

namespace mll::simd::avx2 {

namespace {

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }
inline __m256d dup_re(__m256d v) { return _mm256_movedup_pd(v); }
inline __m256d dup_im(__m256d v) { return _mm256_permute_pd(v, 0xF); }
inline __m256d swap_ri(__m256d v) { return _mm256_permute_pd(v, 0x5); }

// acc_r holds [ar br, ai br], acc_i holds [ar bi, ai bi] summed over lanes.
struct Sums {
  double ar_br, ai_br, ar_bi, ai_bi;
};

Sums reduce(__m256d acc_r, __m256d acc_i) {
  alignas(32) double r[4];
  alignas(32) double i[4];
  _mm256_store_pd(r, acc_r);
  _mm256_store_pd(i, acc_i);
  return {r[0] + r[2], r[1] + r[3], i[0] + i[2], i[1] + i[3]};
}

Sums accumulate(const Complex* a, const Complex* b, std::size_t n) {
  __m256d acc_r = _mm256_setzero_pd();
  __m256d acc_i = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d va = load2(a + k);
    const __m256d vb = load2(b + k);
    acc_r = _mm256_fmadd_pd(va, dup_re(vb), acc_r);
    acc_i = _mm256_fmadd_pd(va, dup_im(vb), acc_i);
  }
  Sums s = reduce(acc_r, acc_i);
  for (; k < n; ++k) {
    s.ar_br += a[k].real() * b[k].real();
    s.ai_br += a[k].imag() * b[k].real();
    s.ar_bi += a[k].real() * b[k].imag();
    s.ai_bi += a[k].imag() * b[k].imag();
  }
  return s;
}

}  // namespace

Complex dot(const Complex* a, const Complex* b, std::size_t n) {
  const Sums s = accumulate(a, b, n);
  return {s.ar_br - s.ai_bi, s.ar_bi + s.ai_br};
}

Complex dot_conj(const Complex* a, const Complex* b, std::size_t n) {
  const Sums s = accumulate(a, b, n);
  return {s.ar_br + s.ai_bi, s.ar_bi - s.ai_br};
}

void stencil_row(const StencilRow& row) {
  if (row.n < 3) return;
  const __m256d inv_2h = _mm256_set1_pd(0.5 / row.h);
  const __m256d inv_h2 = _mm256_set1_pd(1.0 / (row.h * row.h));
  const __m256d quarter = _mm256_set1_pd(-0.25);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d neg_re = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
  std::size_t i = 1;
  for (; i + 2 <= row.n - 1; i += 2) {
    const __m256d f = load2(row.mid + i);
    const __m256d right = load2(row.mid + i + 1);
    const __m256d left = load2(row.mid + i - 1);
    const __m256d up = load2(row.up + i);
    const __m256d down = load2(row.down + i);
    const __m256d fx = _mm256_mul_pd(_mm256_sub_pd(right, left), inv_2h);
    const __m256d fy = _mm256_mul_pd(_mm256_sub_pd(up, down), inv_2h);
    const __m256d sum4 = _mm256_add_pd(_mm256_add_pd(right, left), _mm256_add_pd(up, down));
    const __m256d lap = _mm256_mul_pd(_mm256_fnmadd_pd(four, f, sum4), inv_h2);
    const __m256d s = load2(row.s + i);
    const __m256d drift = _mm256_fmsub_pd(dup_re(s), fy, _mm256_mul_pd(dup_im(s), fx));
    const __m256d i_drift = _mm256_mul_pd(swap_ri(drift), neg_re);
    const __m256d v = load2(row.v + i);
    const __m256d vf = _mm256_fmaddsub_pd(dup_re(v), f, _mm256_mul_pd(dup_im(v), swap_ri(f)));
    store2(row.out + i, _mm256_add_pd(_mm256_fmadd_pd(quarter, lap, i_drift), vf));
  }
  if (i < row.n - 1) {
    StencilRow tail = row;
    const std::size_t off = i - 1;
    tail.up += off;
    tail.mid += off;
    tail.down += off;
    tail.s += off;
    tail.v += off;
    tail.out += off;
    tail.n = row.n - off;
    scalar::stencil_row(tail);
  }
}

}  // namespace mll::simd::avx2

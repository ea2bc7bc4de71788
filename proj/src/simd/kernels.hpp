#pragma once

#include "mll/simd.hpp"

namespace mll::simd {

namespace scalar {
Complex dot(const Complex* a, const Complex* b, std::size_t n);
Complex dot_conj(const Complex* a, const Complex* b, std::size_t n);
void stencil_row(const StencilRow& row);
}  // namespace scalar

#if defined(MLL_HAVE_AVX2)
namespace avx2 {
Complex dot(const Complex* a, const Complex* b, std::size_t n);
Complex dot_conj(const Complex* a, const Complex* b, std::size_t n);
void stencil_row(const StencilRow& row);
}  // namespace avx2
#endif

#if defined(MLL_HAVE_NEON)
namespace neon {
Complex dot(const Complex* a, const Complex* b, std::size_t n);
Complex dot_conj(const Complex* a, const Complex* b, std::size_t n);
void stencil_row(const StencilRow& row);
}  // namespace neon
#endif

}  // namespace mll::simd

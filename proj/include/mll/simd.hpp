#pragma once

// Data-parallel inner loops with a scalar reference implementation and
// vectorized variants selected at runtime. The environment variable MLL_SIMD
// (scalar | avx2 | neon) overrides the automatic choice; an unsupported
// request falls back to scalar.

#include <cstddef>
#include <span>

#include "mll/complex.hpp"

namespace mll::simd {

enum class Isa { Scalar, Avx2, Neon };

/// One row of the magnetic five-point stencil. For interior columns
/// 1 <= i < n - 1 it writes
///
///   out[i] = -lap/4 + i (Re s[i] fy - Im s[i] fx) + v[i] mid[i]
///
/// with central differences fx, fy and the five-point Laplacian lap, which
/// equals -d_z d_zbar f - (S d_z f - conj(S) d_zbar f) + V f. Columns 0 and
/// n - 1 are left untouched. `up` is the row at y + h.
struct StencilRow {
  const Complex* up;
  const Complex* mid;
  const Complex* down;
  const Complex* s;
  const Complex* v;
  Complex* out;
  std::size_t n;
  double h;
};

struct KernelTable {
  /// sum a[i] b[i]
  Complex (*dot)(const Complex* a, const Complex* b, std::size_t n);
  /// sum conj(a[i]) b[i]
  Complex (*dot_conj)(const Complex* a, const Complex* b, std::size_t n);
  void (*stencil_row)(const StencilRow& row);
};

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
/// Throws InvalidArgument for an unsupported ISA.
const KernelTable& kernels(Isa isa);
Isa active_isa();

Complex dot(std::span<const Complex> a, std::span<const Complex> b);
Complex dot_conj(std::span<const Complex> a, std::span<const Complex> b);
void stencil_row(const StencilRow& row);

}  // namespace mll::simd

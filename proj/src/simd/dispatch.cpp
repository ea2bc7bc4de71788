#include <cstdlib>
#include <cstring>

#include "kernels.hpp"
#include "mll/error.hpp"

namespace mll::simd {

namespace {

constexpr KernelTable kScalar{&scalar::dot, &scalar::dot_conj, &scalar::stencil_row};
#if defined(MLL_HAVE_AVX2)
constexpr KernelTable kAvx2{&avx2::dot, &avx2::dot_conj, &avx2::stencil_row};
#endif
#if defined(MLL_HAVE_NEON)
constexpr KernelTable kNeon{&neon::dot, &neon::dot_conj, &neon::stencil_row};
#endif

Isa detect() {
  Isa best = Isa::Scalar;
  if (isa_supported(Isa::Avx2)) best = Isa::Avx2;
  if (isa_supported(Isa::Neon)) best = Isa::Neon;
  const char* env = std::getenv("MLL_SIMD");
  if (env == nullptr) return best;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
    if (std::strcmp(env, isa_name(isa)) == 0) return isa_supported(isa) ? isa : Isa::Scalar;
  }
  return best;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::InvalidArgument, "dot product operands differ in length");
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(MLL_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(MLL_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Isa isa) {
  if (!isa_supported(isa)) {
    throw Error(ErrorCode::InvalidArgument, std::string("instruction set not available: ") + isa_name(isa));
  }
  switch (isa) {
#if defined(MLL_HAVE_AVX2)
    case Isa::Avx2: return kAvx2;
#endif
#if defined(MLL_HAVE_NEON)
    case Isa::Neon: return kNeon;
#endif
    default: return kScalar;
  }
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  check_sizes(a.size(), b.size());
  return kernels(active_isa()).dot(a.data(), b.data(), a.size());
}

Complex dot_conj(std::span<const Complex> a, std::span<const Complex> b) {
  check_sizes(a.size(), b.size());
  return kernels(active_isa()).dot_conj(a.data(), b.data(), a.size());
}

void stencil_row(const StencilRow& row) { kernels(active_isa()).stencil_row(row); }

}  // namespace mll::simd

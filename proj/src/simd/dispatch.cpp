#include <cstdlib>
#include <string_view>

#include "klab/simd/bitset_kernels.hpp"

namespace klab::simd {

#if defined(KLAB_HAVE_AVX2)
const BitsetKernels& avx2_kernel_table();
#endif
#if defined(KLAB_HAVE_NEON)
const BitsetKernels& neon_kernel_table();
#endif

const BitsetKernels* avx2_kernels() {
#if defined(KLAB_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const BitsetKernels* neon_kernels() {
#if defined(KLAB_HAVE_NEON)
  return &neon_kernel_table();  // baseline on AArch64
#else
  return nullptr;
#endif
}

namespace {

const BitsetKernels& select_kernels() {
  if (const char* forced = std::getenv("KEISLER_LAB_SIMD");
      forced != nullptr && std::string_view(forced) == "scalar") {
    return scalar_kernels();
  }
  if (const auto* k = avx2_kernels()) return *k;
  if (const auto* k = neon_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const BitsetKernels& active_kernels() {
  static const BitsetKernels& chosen = select_kernels();
  return chosen;
}

}  // namespace klab::simd

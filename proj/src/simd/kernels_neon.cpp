// Built only for AArch64 targets.

#include <arm_neon.h>

#include <bit>

#include "klab/simd/bitset_kernels.hpp"

namespace klab::simd {
namespace {

inline std::size_t count_u64x2(uint64x2_t v) {
  return static_cast<std::size_t>(vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v))));
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) total += count_u64x2(vld1q_u64(a + i));
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) total += count_u64x2(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] &= src[i];
}

void andnot_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  // vbicq_u64(x, y) computes x & ~y.
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] &= ~src[i];
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

bool any(const std::uint64_t* a, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(a + i))) != 0) return true;
  }
  for (; i < words; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

constexpr BitsetKernels kNeon{"neon", popcount, and_popcount, and_into, andnot_into, or_into, any};

}  // namespace

const BitsetKernels& neon_kernel_table() { return kNeon; }

}  // namespace klab::simd

#pragma once

// Word-parallel kernels behind VertexSet. Each variant works on arrays of 64-bit words and
// must produce results identical to the scalar reference; the active table is picked once
// at first use from the running CPU.

#include <cstddef>
#include <cstdint>

namespace klab::simd {

struct BitsetKernels {
  const char* name;
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  void (*andnot_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  bool (*any)(const std::uint64_t* a, std::size_t words);
};

const BitsetKernels& scalar_kernels();

/// nullptr when the variant was not compiled in or the CPU lacks the instruction set.
const BitsetKernels* avx2_kernels();
const BitsetKernels* neon_kernels();

/// Best available table. KEISLER_LAB_SIMD=scalar forces the reference kernels.
const BitsetKernels& active_kernels();

}  // namespace klab::simd

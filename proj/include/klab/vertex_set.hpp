#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "klab/simd/bitset_kernels.hpp"

namespace klab {

using Vertex = std::uint32_t;

/// Fixed-universe bitset over vertices {0, ..., universe-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::uint64_t* data() const noexcept { return words_.data(); }

  bool test(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  /// Grows the universe; new positions are clear.
  void resize(std::size_t universe);

  std::size_t count() const { return simd::active_kernels().popcount(words_.data(), words_.size()); }
  bool any() const { return simd::active_kernels().any(words_.data(), words_.size()); }
  bool none() const { return !any(); }
  std::size_t intersection_count(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  /// Clears every position <= v.
  void clear_through(Vertex v);

  /// Smallest member >= from, or universe() when none.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= universe_) return universe_;
    std::size_t w = from >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (word != 0) {
        const std::size_t pos = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
        return pos < universe_ ? pos : universe_;
      }
      if (++w == words_.size()) return universe_;
      word = words_[w];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t v = first(); v < universe_; v = next(v + 1)) f(static_cast<Vertex>(v));
  }

  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace klab

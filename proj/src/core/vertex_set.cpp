#include "klab/vertex_set.hpp"

#include <algorithm>

#include "klab/error.hpp"

namespace klab {

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (const auto tail = universe & 63; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

void VertexSet::resize(std::size_t universe) {
  if (universe < universe_) throw invalid_input("VertexSet cannot shrink");
  universe_ = universe;
  words_.resize((universe + 63) / 64, 0);
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const {
  return simd::active_kernels().and_popcount(words_.data(), other.words_.data(),
                                             std::min(words_.size(), other.words_.size()));
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  const auto common = std::min(words_.size(), other.words_.size());
  simd::active_kernels().and_into(words_.data(), other.words_.data(), common);
  std::fill(words_.begin() + static_cast<std::ptrdiff_t>(common), words_.end(), 0);
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) throw invalid_input("VertexSet union with a larger universe");
  simd::active_kernels().or_into(words_.data(), other.words_.data(), other.words_.size());
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  simd::active_kernels().andnot_into(words_.data(), other.words_.data(),
                                     std::min(words_.size(), other.words_.size()));
  return *this;
}

void VertexSet::clear_through(Vertex v) {
  const std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(v) + 1, universe_);
  const std::size_t full_words = limit >> 6;
  std::fill(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(full_words), 0);
  if (const auto rem = limit & 63; rem != 0) words_[full_words] &= ~((std::uint64_t{1} << rem) - 1);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace klab

#include "klab/structures/cliques.hpp"

#include <algorithm>
#include <string>

#include "klab/error.hpp"

namespace klab {
namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

/// Calls f on every k-subset of `items` (in lexicographic index order); f returns false to stop.
template <typename F>
bool for_each_subset(std::span<const Vertex> items, std::size_t k, F&& f) {
  if (k > items.size()) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (!f(std::span<const Vertex>(subset))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

class CliqueSearch {
 public:
  CliqueSearch(const Hypergraph& h, std::size_t size) : h_(h), size_(size), r_(static_cast<std::size_t>(h.arity())) {}

  std::optional<std::vector<Vertex>> run(std::span<const Vertex> base, const VertexSet* allowed) {
    current_.assign(base.begin(), base.end());
    std::sort(current_.begin(), current_.end());
    if (std::adjacent_find(current_.begin(), current_.end()) != current_.end()) return std::nullopt;
    if (current_.size() > size_) return std::nullopt;
    for (Vertex v : current_) {
      if (v >= h_.vertex_count()) throw invalid_input("clique base vertex out of range");
    }

    const std::size_t min_degree = binomial(size_ - 1, r_ - 1);
    for (Vertex v : current_) {
      if (h_.degree(v) < min_degree && size_ >= r_) return std::nullopt;
    }
    // The base itself must already be complete.
    bool base_complete = for_each_subset(current_, r_, [&](std::span<const Vertex> e) { return h_.has_edge(e); });
    if (!base_complete) return std::nullopt;

    VertexSet cand = allowed != nullptr ? *allowed : VertexSet::full(h_.vertex_count());
    if (cand.universe() != h_.vertex_count()) cand.resize(h_.vertex_count());
    for (Vertex v : current_) cand.reset(v);
    if (size_ >= r_) {
      for (std::size_t v = cand.first(); v < cand.universe(); v = cand.next(v + 1)) {
        if (h_.degree(static_cast<Vertex>(v)) < min_degree) cand.reset(static_cast<Vertex>(v));
      }
    }
    if (r_ >= 2 && current_.size() + 1 >= r_) {
      for_each_subset(current_, r_ - 1, [&](std::span<const Vertex> sigma) {
        cand &= h_.link(sigma);
        return true;
      });
    }
    if (!extend(std::move(cand))) return std::nullopt;
    std::sort(current_.begin(), current_.end());
    return current_;
  }

 private:
  bool extend(VertexSet cand) {
    if (current_.size() == size_) return true;
    const std::size_t need = size_ - current_.size();
    if (cand.count() < need) return false;
    for (std::size_t v = cand.first(); v < cand.universe(); v = cand.next(v + 1)) {
      const auto vertex = static_cast<Vertex>(v);
      VertexSet next = cand;
      next.clear_through(vertex);
      if (need > 1) {
        std::vector<Vertex> sigma;
        for_each_subset(current_, r_ - 2, [&](std::span<const Vertex> tau) {
          sigma.assign(tau.begin(), tau.end());
          sigma.insert(std::upper_bound(sigma.begin(), sigma.end(), vertex), vertex);
          next &= h_.link(sigma);
          return next.any();
        });
      }
      current_.push_back(vertex);
      if (extend(std::move(next))) return true;
      current_.pop_back();
    }
    return false;
  }

  const Hypergraph& h_;
  std::size_t size_;
  std::size_t r_;
  std::vector<Vertex> current_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_clique(const Hypergraph& h, std::size_t size,
                                               std::span<const Vertex> base, const VertexSet* allowed) {
  return CliqueSearch(h, size).run(base, allowed);
}

bool is_free(const Hypergraph& h, std::size_t s) {
  if (s <= static_cast<std::size_t>(h.arity())) {
    throw invalid_input("K^r_s-freeness needs s > r (r=" + std::to_string(h.arity()) +
                        ", s=" + std::to_string(s) + ")");
  }
  return !find_clique(h, s).has_value();
}

ExtensionResult add_vertex_with_links(const Hypergraph& h, const std::vector<Edge>& links, std::size_t s) {
  if (s <= static_cast<std::size_t>(h.arity())) throw invalid_input("add_vertex_with_links needs s > r");
  const auto link_size = static_cast<std::size_t>(h.arity() - 1);
  for (const auto& sigma : links) {
    if (sigma.size() != link_size) throw invalid_input("link must be an (r-1)-subset");
    for (Vertex v : sigma) {
      if (v >= h.vertex_count()) throw invalid_input("link vertex out of range");
    }
  }

  Hypergraph out = h;
  const Vertex star = out.add_vertex();
  for (const auto& sigma : links) {
    Edge e = sigma;
    e.push_back(star);
    try {
      out.insert_edge(std::move(e));
    } catch (const invalid_input&) {
      throw invalid_input("link repeats a vertex");
    }
  }
  const Vertex base[1] = {star};
  if (auto clique = find_clique(out, s, base)) return FreenessViolation{std::move(*clique)};
  if (auto clique = find_clique(out, s)) return FreenessViolation{std::move(*clique)};
  return out;
}

}  // namespace klab

#include "klab/structures/search.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "klab/error.hpp"
#include "klab/structures/cliques.hpp"

namespace klab {
namespace {

/// Maximum independent set as a maximum clique of the complement (MCQ-style colouring bound).
class IndependenceSearch {
 public:
  IndependenceSearch(const Hypergraph& g, std::uint64_t budget) : n_(g.vertex_count()), budget_(budget) {
    comp_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      VertexSet c = VertexSet::full(n_);
      c -= g.neighbors(v);
      c.reset(v);
      comp_.push_back(std::move(c));
    }
  }

  AlphaResult run() {
    VertexSet all = VertexSet::full(n_);
    expand(all);
    AlphaResult out;
    out.value = best_.size();
    out.witness = best_;
    std::sort(out.witness.begin(), out.witness.end());
    out.exhausted = exhausted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void expand(VertexSet cand) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    // Greedy colouring of cand by independent sets of the complement.
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    VertexSet uncoloured = cand;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      VertexSet q = uncoloured;
      while (q.any()) {
        const auto v = static_cast<Vertex>(q.first());
        q.reset(v);
        q -= comp_[v];
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      VertexSet next = cand;
      next &= comp_[v];
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (exhausted_) return;
      cand.reset(v);
    }
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<VertexSet> comp_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

/// Include/exclude branching for s > 3: the chosen set must stay K_{s-1}-free.
class FreeSubsetSearch {
 public:
  FreeSubsetSearch(const Hypergraph& g, std::size_t s, std::uint64_t budget)
      : g_(g), clique_size_(s - 1), budget_(budget), chosen_(g.vertex_count()) {
    order_.resize(g.vertex_count());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    // Low-degree vertices first: they are the easiest to include.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  }

  AlphaResult run() {
    recurse(0);
    AlphaResult out;
    out.value = best_.size();
    out.witness = best_;
    std::sort(out.witness.begin(), out.witness.end());
    out.exhausted = exhausted_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void recurse(std::size_t i) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (current_.size() + (order_.size() - i) <= best_.size()) return;
    if (i == order_.size()) {
      best_ = current_;
      return;
    }
    const Vertex v = order_[i];
    const Vertex base[1] = {v};
    if (!find_clique(g_, clique_size_, base, &chosen_)) {
      chosen_.set(v);
      current_.push_back(v);
      recurse(i + 1);
      current_.pop_back();
      chosen_.reset(v);
    }
    recurse(i + 1);
  }

  const Hypergraph& g_;
  std::size_t clique_size_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  VertexSet chosen_;
  std::vector<Vertex> order_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

AlphaResult alpha_s(const Hypergraph& g, std::size_t s, std::uint64_t budget) {
  if (g.arity() != 2) throw invalid_input("alpha_s requires a graph (arity 2)");
  if (s < 3) throw invalid_input("alpha_s requires s >= 3");
  if (g.vertex_count() == 0) return {};
  if (s == 3) return IndependenceSearch(g, budget).run();
  return FreeSubsetSearch(g, s, budget).run();
}

namespace {

class EmbedSearch {
 public:
  EmbedSearch(const Hypergraph& pattern, const Hypergraph& host, std::uint64_t budget)
      : p_(pattern), h_(host), budget_(budget), used_(host.vertex_count()) {
    plan_order();
  }

  EmbedResult run() {
    EmbedResult out;
    image_.assign(p_.vertex_count(), 0);
    const bool found = place(0);
    out.nodes = nodes_;
    if (found) {
      out.status = EmbedResult::Status::found;
      out.mapping = image_;
    } else {
      out.status = exhausted_ ? EmbedResult::Status::exhausted : EmbedResult::Status::not_found;
    }
    return out;
  }

 private:
  // Next pattern vertex: most already-placed neighbours, then highest degree, then lowest index.
  void plan_order() {
    const std::size_t n = p_.vertex_count();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> placed_nbrs(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || placed_nbrs[v] > placed_nbrs[best] ||
            (placed_nbrs[v] == placed_nbrs[best] && p_.degree(static_cast<Vertex>(v)) > p_.degree(static_cast<Vertex>(best)))) {
          best = v;
        }
      }
      placed[best] = true;
      order_.push_back(static_cast<Vertex>(best));
      if (p_.arity() == 2) {
        p_.neighbors(static_cast<Vertex>(best)).for_each([&](Vertex u) { ++placed_nbrs[u]; });
      } else {
        for (const auto& e : p_.edges()) {
          if (std::find(e.begin(), e.end(), static_cast<Vertex>(best)) == e.end()) continue;
          for (Vertex u : e) ++placed_nbrs[u];
        }
      }
    }
  }

  bool consistent_hyper(std::size_t depth, Vertex candidate) {
    // Every r-subset of placed pattern vertices containing the new one must agree.
    const auto r = static_cast<std::size_t>(p_.arity());
    const Vertex g = order_[depth];
    std::vector<std::size_t> idx(r - 1);
    if (depth < r - 1) return true;
    for (std::size_t i = 0; i < r - 1; ++i) idx[i] = i;
    std::vector<Vertex> pe(r), he(r);
    while (true) {
      for (std::size_t i = 0; i < r - 1; ++i) {
        pe[i] = order_[idx[i]];
        he[i] = image_[order_[idx[i]]];
      }
      pe[r - 1] = g;
      he[r - 1] = candidate;
      if (p_.has_edge(pe) != h_.has_edge(he)) return false;
      std::size_t i = r - 1;
      while (i > 0 && idx[i - 1] == depth - (r - 1) + i - 1) --i;
      if (i == 0) return true;
      ++idx[i - 1];
      for (std::size_t j = i; j < r - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const Vertex g = order_[depth];
    VertexSet cand = VertexSet::full(h_.vertex_count());
    cand -= used_;
    if (p_.arity() == 2) {
      for (std::size_t d = 0; d < depth; ++d) {
        const Vertex prev = order_[d];
        if (p_.neighbors(g).test(prev)) {
          cand &= h_.neighbors(image_[prev]);
        } else {
          cand -= h_.neighbors(image_[prev]);
        }
      }
    }
    for (std::size_t v = cand.first(); v < cand.universe(); v = cand.next(v + 1)) {
      const auto hv = static_cast<Vertex>(v);
      if (h_.degree(hv) < p_.degree(g)) continue;
      if (p_.arity() != 2 && !consistent_hyper(depth, hv)) continue;
      image_[g] = hv;
      used_.set(hv);
      if (place(depth + 1)) return true;
      used_.reset(hv);
      if (exhausted_) return false;
    }
    return false;
  }

  const Hypergraph& p_;
  const Hypergraph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  VertexSet used_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
};

}  // namespace

EmbedResult embed_search(const Hypergraph& pattern, const Hypergraph& host, std::uint64_t budget) {
  if (pattern.arity() != host.arity()) throw invalid_input("embed_search needs equal arities");
  if (pattern.vertex_count() > host.vertex_count()) return {};
  return EmbedSearch(pattern, host, budget).run();
}

std::optional<Vertex> extension_probe(const Hypergraph& graph, std::span<const Vertex> adjacent,
                                      std::span<const Vertex> non_adjacent) {
  if (graph.arity() != 2) throw invalid_input("extension_probe requires a graph (arity 2)");
  VertexSet a(graph.vertex_count());
  for (Vertex v : adjacent) {
    if (v >= graph.vertex_count()) throw invalid_input("extension_probe vertex out of range");
    a.set(v);
  }
  VertexSet cand = VertexSet::full(graph.vertex_count());
  for (Vertex v : non_adjacent) {
    if (v >= graph.vertex_count()) throw invalid_input("extension_probe vertex out of range");
    if (a.test(v)) throw invalid_input("extension_probe sets are not disjoint (vertex " + std::to_string(v) + ")");
    cand.reset(v);
    cand -= graph.neighbors(v);
  }
  for (Vertex v : adjacent) {
    cand.reset(v);
    cand &= graph.neighbors(v);
  }
  const std::size_t first = cand.first();
  if (first == cand.universe()) return std::nullopt;
  return static_cast<Vertex>(first);
}

std::optional<Vertex> extension_probe(const BipartiteGraph& graph, std::span<const Vertex> adjacent,
                                      std::span<const Vertex> non_adjacent) {
  return extension_probe(graph.graph(), adjacent, non_adjacent);
}

}  // namespace klab

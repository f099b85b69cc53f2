#include "oracles.hpp"

#include <algorithm>
#include <bit>

namespace oracle {
namespace {

bool edge_present(const klab::Hypergraph& h, std::vector<Vertex> tuple) {
  std::sort(tuple.begin(), tuple.end());
  if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end()) return false;
  return h.edges().count(tuple) != 0;
}

// all size-k subsets of [0, n) in lexicographic order
template <typename F>
bool any_subset(std::size_t n, std::size_t k, F&& fn) {
  if (k > n) return false;
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
  while (true) {
    if (fn(idx)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
}

bool clique_in_mask(const std::vector<std::uint32_t>& adj, std::uint32_t candidates, std::size_t need) {
  if (need == 0) return true;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (clique_in_mask(adj, candidates & adj[v], need - 1)) return true;
  }
  return false;
}

}  // namespace

std::size_t alpha(const klab::Hypergraph& g, std::size_t s) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e[0]] |= 1U << e[1];
    adj[e[1]] |= 1U << e[0];
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    if (!clique_in_mask(adj, mask, s - 1)) best = size;
  }
  return best;
}

namespace {

// grows an ascending vertex sequence, keeping every r-subset of it an edge
bool extend_clique(const klab::Hypergraph& h, std::vector<Vertex>& chosen, std::size_t s) {
  if (chosen.size() == s) return true;
  const std::size_t r = static_cast<std::size_t>(h.arity());
  const Vertex from = chosen.empty() ? 0 : chosen.back() + 1;
  for (Vertex v = from; v < h.vertex_count(); ++v) {
    bool ok = true;
    if (chosen.size() + 1 >= r) {
      ok = !any_subset(chosen.size(), r - 1, [&](const std::vector<Vertex>& pick) {
        std::vector<Vertex> e;
        for (Vertex i : pick) e.push_back(chosen[i]);
        e.push_back(v);
        return !edge_present(h, e);
      });
    }
    if (!ok) continue;
    chosen.push_back(v);
    if (extend_clique(h, chosen, s)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool has_clique(const klab::Hypergraph& h, std::size_t s) {
  std::vector<Vertex> chosen;
  return extend_clique(h, chosen, s);
}

bool eval(const klab::Hypergraph& h, const klab::Formula& f, const std::vector<Vertex>& objects,
          const std::vector<Vertex>& params) {
  using K = klab::Formula::Kind;
  const auto value = [&](const klab::Term& t) {
    return t.sort == klab::Term::Sort::object ? objects.at(t.index - 1) : params.at(t.index - 1);
  };
  switch (f.kind()) {
    case K::truth:
      return true;
    case K::falsity:
      return false;
    case K::negation:
      return !eval(h, f.operands()[0], objects, params);
    case K::conjunction:
      return std::all_of(f.operands().begin(), f.operands().end(),
                         [&](const klab::Formula& g) { return eval(h, g, objects, params); });
    case K::disjunction:
      return std::any_of(f.operands().begin(), f.operands().end(),
                         [&](const klab::Formula& g) { return eval(h, g, objects, params); });
    case K::atom: {
      const auto& a = f.atom_value();
      if (a.kind == klab::Atom::Kind::equality) return value(a.terms[0]) == value(a.terms[1]);
      std::vector<Vertex> tuple;
      for (const auto& t : a.terms) tuple.push_back(value(t));
      return edge_present(h, tuple);
    }
  }
  return false;
}

ColoringStats coloring_stats(const klab::WeightedHypergraph& h) {
  const std::size_t n = h.vertex_count();
  const int r = h.arity();
  std::vector<int> chi(n, 1);
  klab::Rational sum = 0, max = 0;
  std::uint64_t count = 0;
  while (true) {
    klab::Rational w = 0;
    for (const auto& [edge, weight] : h.weights()) {
      std::set<int> colours;
      for (Vertex v : edge) colours.insert(chi[v]);
      if (colours.size() == edge.size()) w += weight;
    }
    sum += w;
    max = std::max(max, w);
    ++count;
    std::size_t pos = n;
    while (pos > 0 && chi[pos - 1] == r) chi[--pos] = 1;
    if (pos == 0) break;
    ++chi[pos - 1];
  }
  klab::Rational mean = sum / klab::Rational(static_cast<unsigned long>(count));
  return {mean, max};
}

klab::WeightedHypergraph random_weighted(std::mt19937_64& rng, std::size_t n, int r) {
  klab::WeightedHypergraph h(n, r);
  std::uniform_int_distribution<int> coin(0, 2), num(0, 12), den(1, 7);
  any_subset(n, static_cast<std::size_t>(r), [&](const std::vector<Vertex>& e) {
    if (coin(rng) != 0) h.set_weight(e, klab::make_rational(num(rng), den(rng)));
    return false;
  });
  return h;
}

klab::Hypergraph random_graph(std::mt19937_64& rng, std::size_t n, unsigned num, unsigned den) {
  klab::Hypergraph g(2, n);
  std::uniform_int_distribution<unsigned> roll(0, den - 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (roll(rng) < num) g.insert_edge({u, v});
    }
  }
  return g;
}

}  // namespace oracle

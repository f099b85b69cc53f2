#include "klab/structures/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "klab/error.hpp"
#include "klab/structures/cliques.hpp"

namespace klab {
namespace {

std::vector<Edge> all_subsets(std::size_t n, std::size_t r) {
  std::vector<Edge> out;
  if (r > n) return out;
  Edge e(r);
  for (std::size_t i = 0; i < r; ++i) e[i] = static_cast<Vertex>(i);
  while (true) {
    out.push_back(e);
    std::size_t i = r;
    while (i > 0 && e[i - 1] == n - r + i - 1) --i;
    if (i == 0) return out;
    ++e[i - 1];
    for (std::size_t j = i; j < r; ++j) e[j] = e[j - 1] + 1;
  }
}

// Keeps `edge` iff no K^r_s appears; returns whether it was kept.
bool try_insert(Hypergraph& h, const Edge& edge, std::size_t s) {
  if (!h.insert_edge(edge)) return false;
  if (find_clique(h, s, edge)) {
    h.erase_edge(edge);
    return false;
  }
  return true;
}

void saturate(Hypergraph& h, std::size_t s, std::mt19937_64& rng) {
  auto candidates = all_subsets(h.vertex_count(), static_cast<std::size_t>(h.arity()));
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (const auto& e : candidates) {
    if (!h.has_edge(e)) try_insert(h, e, s);
  }
}

std::string circulant_name(std::size_t n, const std::set<std::size_t>& d) {
  std::string out = "circulant:" + std::to_string(n) + ":";
  bool first = true;
  for (auto x : d) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  return out;
}

constexpr std::uint64_t kAlphaBudget = 2'000'000;

}  // namespace

Hypergraph random_maximal_free(std::size_t n, int r, std::size_t s, std::uint64_t seed) {
  if (r < 2) throw invalid_input("random_maximal_free needs r >= 2");
  if (s <= static_cast<std::size_t>(r)) throw invalid_input("random_maximal_free needs s > r");
  Hypergraph h(r, n);
  std::mt19937_64 rng(seed);
  saturate(h, s, rng);
  return h;
}

Hypergraph cyclic_graph(std::size_t n, const std::set<std::size_t>& connection_set) {
  Hypergraph h(2, n);
  for (auto d : connection_set) {
    if (d < 1 || d > n / 2) {
      throw invalid_input("circulant difference " + std::to_string(d) + " outside 1.." + std::to_string(n / 2));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (auto d : connection_set) {
      const auto j = static_cast<Vertex>((i + d) % n);
      if (!h.has_edge(std::vector<Vertex>{static_cast<Vertex>(i), j})) h.insert_edge({static_cast<Vertex>(i), j});
    }
  }
  return h;
}

Hypergraph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});           // outer 5-cycle
    edges.push_back({i, i + 5});                 // spokes
    edges.push_back({i + 5, (i + 2) % 5 + 5});   // inner pentagram
  }
  return Hypergraph::from_edges(2, 10, edges);
}

Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((rng() & 1U) != 0) {
        arcs.emplace_back(u, v);
      } else {
        arcs.emplace_back(v, u);
      }
    }
  }
  return Tournament::from_arcs(n, arcs);
}

SmallAlphaSearch search_small_alpha(std::size_t n, std::size_t s, std::size_t target,
                                    std::size_t budget, std::uint64_t seed) {
  if (s < 3) throw invalid_input("search_small_alpha needs s >= 3");
  SmallAlphaSearch out;
  out.graph = Hypergraph(2, n);
  out.alpha = n;
  out.origin = circulant_name(n, {});
  bool have_best = false;

  auto consider = [&](const Hypergraph& g, const std::string& origin) {
    ++out.evaluations;
    if (!is_free(g, s)) return false;
    const auto a = alpha_s(g, s, kAlphaBudget);
    if (a.exhausted) return false;
    if (!have_best || a.value < out.alpha) {
      out.graph = g;
      out.alpha = a.value;
      out.origin = origin;
      have_best = true;
    }
    return a.value <= target;
  };

  // Circulant seeds: every connection set when there are few differences, a sample otherwise.
  std::mt19937_64 rng(seed);
  const std::size_t half = n / 2;
  std::vector<std::set<std::size_t>> seeds;
  if (half <= 12) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << half); ++mask) {
      std::set<std::size_t> d;
      for (std::size_t b = 0; b < half; ++b) {
        if ((mask >> b) & 1U) d.insert(b + 1);
      }
      seeds.push_back(std::move(d));
    }
  } else {
    seeds.emplace_back();
    for (std::size_t i = 0; i < 4096; ++i) {
      std::set<std::size_t> d;
      for (std::size_t b = 1; b <= half; ++b) {
        if ((rng() & 3U) == 0) d.insert(b);
      }
      seeds.push_back(std::move(d));
    }
  }
  for (const auto& d : seeds) {
    if (out.evaluations >= budget) break;
    if (consider(cyclic_graph(n, d), circulant_name(n, d))) {
      out.found = true;
      return out;
    }
  }

  // Local search from the best seed (or a random maximal graph): drop a random edge, re-saturate.
  Hypergraph current = have_best ? out.graph : random_maximal_free(n, 2, s, seed);
  std::size_t current_alpha = have_best ? out.alpha : n;
  if (!have_best && consider(current, "local-search")) {
    out.found = true;
    return out;
  }
  current_alpha = out.alpha;
  while (out.evaluations < budget) {
    Hypergraph next = current;
    if (next.edge_count() > 0) {
      std::vector<Edge> edges(next.edges().begin(), next.edges().end());
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      const std::size_t drops = 1 + (rng() % 2);
      for (std::size_t i = 0; i < drops; ++i) next.erase_edge(edges[pick(rng)]);
    }
    saturate(next, s, rng);
    ++out.evaluations;
    if (!is_free(next, s)) continue;
    const auto a = alpha_s(next, s, kAlphaBudget);
    if (a.exhausted) continue;
    if (a.value <= current_alpha) {
      current = next;
      current_alpha = a.value;
      if (a.value < out.alpha || !have_best) {
        out.graph = next;
        out.alpha = a.value;
        out.origin = "local-search";
        have_best = true;
      }
      if (a.value <= target) {
        out.found = true;
        return out;
      }
    }
  }
  return out;
}

}  // namespace klab

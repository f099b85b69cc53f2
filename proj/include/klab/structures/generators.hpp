#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>

#include "klab/structures/hypergraph.hpp"
#include "klab/structures/relational.hpp"
#include "klab/structures/search.hpp"

namespace klab {

/// Seeded random greedy process: every r-subset is offered once in a shuffled order and kept
/// iff the graph stays K^r_s-free. The result is maximal K^r_s-free.
Hypergraph random_maximal_free(std::size_t n, int r, std::size_t s, std::uint64_t seed);

/// Circulant graph: i ~ j iff (i - j) mod n or (j - i) mod n lies in `connection_set`.
/// Differences must lie in 1..floor(n/2).
Hypergraph cyclic_graph(std::size_t n, const std::set<std::size_t>& connection_set);

Hypergraph petersen_graph();

Tournament random_tournament(std::size_t n, std::uint64_t seed);

struct SmallAlphaSearch {
  bool found = false;
  /// Best K_s-free graph seen (the qualifying one when found).
  Hypergraph graph;
  /// Exact alpha_s of `graph`.
  std::size_t alpha = 0;
  /// "circulant:<n>:<d1,d2,...>" or "local-search".
  std::string origin;
  std::size_t evaluations = 0;
};

/// Looks for a K_s-free graph on n vertices with alpha_s <= target. Circulant graphs are tried
/// first, then seeded local search (freeness-preserving edge flips followed by re-saturation).
/// `budget` bounds the number of candidate graphs scored; not finding one is a normal outcome.
SmallAlphaSearch search_small_alpha(std::size_t n, std::size_t s, std::size_t target,
                                    std::size_t budget, std::uint64_t seed);

}  // namespace klab

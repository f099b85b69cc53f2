#pragma once

#include <cstddef>
#include <vector>

#include "klab/coloring/weighted_hypergraph.hpp"
#include "klab/rational.hpp"

namespace klab {

/// colors[v] in {1, ..., r}.
using Coloring = std::vector<int>;

inline constexpr std::size_t kBruteForceVertexCap = 12;

/// Total weight of the edges whose vertices get pairwise distinct colours. Throws
/// invalid_input unless the colouring covers every vertex with a colour in 1..r.
Rational weight_of(const WeightedHypergraph& h, const Coloring& chi);

/// (r!/r^r) w(V).
Rational guarantee_value(const WeightedHypergraph& h);

/// Probability that an edge with `used` distinct colours already placed (no repeats) and
/// `uncolored` vertices left ends up rainbow under uniform random colours:
/// (r-used)!/(r-used-uncolored)! / r^uncolored, or 0 when uncolored > r - used.
Rational split_probability(int r, int used, int uncolored);

struct GreedyTrace {
  Coloring coloring;
  /// expectations[i] is the conditional expected split weight after colouring vertices 0..i-1;
  /// expectations.front() = guarantee_value, expectations.back() = weight_of(coloring).
  std::vector<Rational> expectations;
};

/// Method of conditional expectations: vertices in index order, each takes the colour with the
/// largest conditional expectation (smallest colour on ties). The result weighs at least
/// guarantee_value(h).
Coloring greedy_coloring(const WeightedHypergraph& h);
GreedyTrace greedy_coloring_traced(const WeightedHypergraph& h);

struct BruteForceResult {
  /// Lexicographically first colouring of maximum weight.
  Coloring best;
  Rational best_value;
  /// Mean of weight_of over all r^n colourings.
  Rational average;
};

/// Exhaustive over all r^n colourings. Throws cap_exceeded when n > cap.
BruteForceResult brute_best(const WeightedHypergraph& h, std::size_t cap = kBruteForceVertexCap);

}  // namespace klab

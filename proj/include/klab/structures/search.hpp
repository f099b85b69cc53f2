#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "klab/structures/hypergraph.hpp"
#include "klab/structures/relational.hpp"

namespace klab {

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// alpha_s(G): size of the largest vertex subset inducing a K_{s-1}-free subgraph.
struct AlphaResult {
  /// Exact value, or the best lower bound found when `exhausted`.
  std::size_t value = 0;
  bool exhausted = false;
  /// A subset of size `value` inducing a K_{s-1}-free subgraph.
  std::vector<Vertex> witness;
  std::uint64_t nodes = 0;
};

/// Branch and bound over vertex subsets. s = 3 is the independence number (maximum clique
/// in the complement with a greedy-colouring bound); s > 3 uses include/exclude branching with
/// K_{s-1} checks. Requires a graph (arity 2) and s >= 3.
AlphaResult alpha_s(const Hypergraph& g, std::size_t s, std::uint64_t budget = kDefaultSearchBudget);

struct EmbedResult {
  enum class Status { found, not_found, exhausted };
  Status status = Status::not_found;
  /// mapping[i] is the image of pattern vertex i (when found).
  std::vector<Vertex> mapping;
  std::uint64_t nodes = 0;
};

/// Backtracking search for an induced embedding of `pattern` into `host` (same arity).
EmbedResult embed_search(const Hypergraph& pattern, const Hypergraph& host,
                         std::uint64_t budget = kDefaultSearchBudget);

/// A vertex outside A and B adjacent to every vertex of A and to none of B (the finite
/// analogue of an extension axiom). nullopt when no existing vertex qualifies.
/// Throws invalid_input when A and B intersect or name missing vertices.
std::optional<Vertex> extension_probe(const Hypergraph& graph, std::span<const Vertex> adjacent,
                                      std::span<const Vertex> non_adjacent);
std::optional<Vertex> extension_probe(const BipartiteGraph& graph, std::span<const Vertex> adjacent,
                                      std::span<const Vertex> non_adjacent);

}  // namespace klab

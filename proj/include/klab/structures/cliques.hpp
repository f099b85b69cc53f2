#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "klab/structures/hypergraph.hpp"

namespace klab {

/// Searches for a complete r-graph on `size` vertices that contains every vertex of `base`
/// and draws its remaining vertices from `allowed` (all vertices when null). Returns the
/// clique sorted, or nullopt. Vertices whose degree is below C(size-1, r-1) are pruned.
std::optional<std::vector<Vertex>> find_clique(const Hypergraph& h, std::size_t size,
                                               std::span<const Vertex> base = {},
                                               const VertexSet* allowed = nullptr);

/// True iff h contains no K^r_s. Throws invalid_input when s <= r.
bool is_free(const Hypergraph& h, std::size_t s);

struct FreenessViolation {
  std::vector<Vertex> clique;
};

using ExtensionResult = std::variant<Hypergraph, FreenessViolation>;

/// Adds a vertex v* = n joined by the edges sigma + {v*} for every (r-1)-subset sigma in
/// `links`, then checks the result for K^r_s. Inputs are not modified.
ExtensionResult add_vertex_with_links(const Hypergraph& h, const std::vector<Edge>& links, std::size_t s);

}  // namespace klab

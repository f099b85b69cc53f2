#pragma once

// Interpretations of the random graph / random bipartite graph inside richer structures:
//   hyper_to_graph          x ~ y  iff  {x, y} + anchors is an r-edge   (anchors: r-2 vertices)
//   tournament_to_bipartite P = out-neighbours of the apex, Q = in-neighbours, E(b, c) iff b -> c
//   feq_to_bipartite        P = objects except the apex, Q = parameters, E(b, z) iff E_z(apex, b)

#include <span>
#include <vector>

#include "klab/structures/hypergraph.hpp"
#include "klab/structures/relational.hpp"

namespace klab {

struct GraphReduct {
  Hypergraph graph;
  /// provenance[i] = source vertex of derived vertex i.
  std::vector<Vertex> provenance;
};

struct BipartiteReduct {
  BipartiteGraph graph;
  std::vector<Vertex> left_provenance;
  /// Source vertices (tournament) or parameter indices (feq2) of Q.
  std::vector<Vertex> right_provenance;
};

GraphReduct hyper_to_graph(const Hypergraph& h, std::span<const Vertex> anchors);
BipartiteReduct tournament_to_bipartite(const Tournament& t, Vertex apex);
BipartiteReduct feq_to_bipartite(const Feq2Structure& f, Vertex apex);

}  // namespace klab

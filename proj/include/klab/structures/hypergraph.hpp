#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "klab/vertex_set.hpp"

namespace klab {

/// Sorted tuple of distinct vertices.
using Edge = std::vector<Vertex>;

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept;
};

/// Finite r-uniform hypergraph on vertices {0, ..., n-1}. Arity 2 is an ordinary graph.
///
/// Besides the canonical edge set, every (r-1)-subset sigma that lies in some edge keeps its
/// link: the set of vertices v with sigma + {v} an edge. For r = 2 the links are the
/// neighbourhoods. Clique and independence searches run entirely on link intersections.
class Hypergraph {
 public:
  Hypergraph() : Hypergraph(2, 0) {}
  Hypergraph(int arity, std::size_t vertex_count);

  /// Validates and canonicalizes every edge (sorts it); rejects repeated vertices,
  /// out-of-range vertices, wrong sizes and duplicate edges.
  static Hypergraph from_edges(int arity, std::size_t vertex_count, const std::vector<Edge>& edges);

  int arity() const noexcept { return arity_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::set<Edge>& edges() const noexcept { return edges_; }

  /// `vertices` need not be sorted; repeated entries give false.
  bool has_edge(std::span<const Vertex> vertices) const;

  /// Link of a sorted (r-1)-subset; an empty set when sigma lies in no edge.
  const VertexSet& link(std::span<const Vertex> sigma) const;
  /// Neighbourhood of v (arity 2 only).
  const VertexSet& neighbors(Vertex v) const;

  std::size_t degree(Vertex v) const { return degree_.at(v); }

  /// Returns false when the edge is already present. Throws on malformed edges.
  bool insert_edge(Edge edge);
  bool erase_edge(const Edge& edge);

  /// Appends an isolated vertex and returns its index.
  Vertex add_vertex();

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.arity_ == b.arity_ && a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  Edge canonical(Edge edge) const;
  VertexSet& mutable_link(const Edge& sigma);

  int arity_;
  std::size_t vertex_count_;
  std::set<Edge> edges_;
  std::unordered_map<Edge, VertexSet, EdgeHash> links_;
  std::vector<std::size_t> degree_;
  VertexSet empty_;
};

}  // namespace klab

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "klab/structures/hypergraph.hpp"

namespace klab {

/// Complete orientation of K_n: every unordered pair of distinct vertices carries exactly one arc.
class Tournament {
 public:
  /// `arcs` lists each pair once as (u, v) meaning u -> v.
  static Tournament from_arcs(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& arcs);

  std::size_t vertex_count() const noexcept { return out_.size(); }
  /// True iff u -> v.
  bool beats(Vertex u, Vertex v) const { return out_.at(u).test(v); }
  const VertexSet& out_neighbors(Vertex u) const { return out_.at(u); }
  std::vector<std::pair<Vertex, Vertex>> arcs() const;

 private:
  std::vector<VertexSet> out_;
};

/// Two-sorted structure: for every parameter z, E_z partitions the objects into blocks of size 2.
/// With an odd object count each parameter has exactly one flagged singleton.
class Feq2Structure {
 public:
  using Block = std::pair<Vertex, Vertex>;

  /// classes[z] lists the 2-blocks of parameter z. Objects missing from every block of z become
  /// that parameter's singleton, which is only legal when object_count is odd.
  static Feq2Structure from_classes(std::size_t object_count, const std::vector<std::vector<Block>>& classes);

  std::size_t object_count() const noexcept { return object_count_; }
  std::size_t parameter_count() const noexcept { return partner_.size(); }

  /// The E_z-classmate of object o other than o itself; nullopt when o is z's singleton.
  std::optional<Vertex> partner(std::size_t z, Vertex o) const;
  /// E_z(a, b) as an equivalence relation (reflexive).
  bool equivalent(std::size_t z, Vertex a, Vertex b) const;
  std::optional<Vertex> singleton(std::size_t z) const;
  /// Blocks of z with the smaller object first, sorted.
  std::vector<Block> blocks(std::size_t z) const;

 private:
  static constexpr Vertex kNone = ~Vertex{0};
  std::size_t object_count_ = 0;
  std::vector<std::vector<Vertex>> partner_;
};

/// Bipartite graph with parts P = {0..left-1} and Q = {left..left+right-1} in one index space.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left_count, std::size_t right_count)
      : left_count_(left_count), graph_(2, left_count + right_count) {}

  /// Edge between left vertex p (0-based in P) and right vertex q (0-based in Q).
  void connect(Vertex p, Vertex q);

  std::size_t left_count() const noexcept { return left_count_; }
  std::size_t right_count() const noexcept { return graph_.vertex_count() - left_count_; }
  bool is_left(Vertex v) const noexcept { return v < left_count_; }
  Vertex right_vertex(Vertex q) const noexcept { return static_cast<Vertex>(left_count_ + q); }

  /// Underlying graph over the combined index space; all edges cross the parts.
  const Hypergraph& graph() const noexcept { return graph_; }

 private:
  std::size_t left_count_;
  Hypergraph graph_;
};

}  // namespace klab

#include "klab/structures/relational.hpp"

#include <algorithm>
#include <string>

#include "klab/error.hpp"

namespace klab {

Tournament Tournament::from_arcs(std::size_t vertex_count,
                                 const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  Tournament t;
  t.out_.assign(vertex_count, VertexSet(vertex_count));
  for (const auto& [u, v] : arcs) {
    if (u >= vertex_count || v >= vertex_count) throw invalid_input("tournament arc out of range");
    if (u == v) throw invalid_input("tournament arc is a loop");
    if (t.out_[u].test(v) || t.out_[v].test(u)) throw invalid_input("tournament pair oriented twice");
    t.out_[u].set(v);
  }
  const std::size_t expected = vertex_count * (vertex_count - (vertex_count > 0 ? 1 : 0)) / 2;
  if (arcs.size() != expected) {
    throw invalid_input("tournament needs exactly one arc per pair (" + std::to_string(expected) +
                        "), got " + std::to_string(arcs.size()));
  }
  return t;
}

std::vector<std::pair<Vertex, Vertex>> Tournament::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < out_.size(); ++u) {
    out_[u].for_each([&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

Feq2Structure Feq2Structure::from_classes(std::size_t object_count,
                                          const std::vector<std::vector<Block>>& classes) {
  Feq2Structure f;
  f.object_count_ = object_count;
  f.partner_.reserve(classes.size());
  for (std::size_t z = 0; z < classes.size(); ++z) {
    std::vector<Vertex> partner(object_count, kNone);
    for (const auto& [a, b] : classes[z]) {
      if (a >= object_count || b >= object_count) throw invalid_input("feq2 block object out of range");
      if (a == b) throw invalid_input("feq2 block must have two distinct objects");
      if (partner[a] != kNone || partner[b] != kNone) {
        throw invalid_input("feq2 parameter " + std::to_string(z) + " covers an object twice");
      }
      partner[a] = b;
      partner[b] = a;
    }
    const auto uncovered = static_cast<std::size_t>(std::count(partner.begin(), partner.end(), kNone));
    if (uncovered != object_count % 2) {
      throw invalid_input("feq2 parameter " + std::to_string(z) + " leaves " + std::to_string(uncovered) +
                          " objects uncovered");
    }
    f.partner_.push_back(std::move(partner));
  }
  return f;
}

std::optional<Vertex> Feq2Structure::partner(std::size_t z, Vertex o) const {
  const Vertex p = partner_.at(z).at(o);
  if (p == kNone) return std::nullopt;
  return p;
}

bool Feq2Structure::equivalent(std::size_t z, Vertex a, Vertex b) const {
  if (a == b) return a < object_count_;
  return partner_.at(z).at(a) == b;
}

std::optional<Vertex> Feq2Structure::singleton(std::size_t z) const {
  const auto& p = partner_.at(z);
  const auto it = std::find(p.begin(), p.end(), kNone);
  if (it == p.end()) return std::nullopt;
  return static_cast<Vertex>(it - p.begin());
}

std::vector<Feq2Structure::Block> Feq2Structure::blocks(std::size_t z) const {
  std::vector<Block> out;
  const auto& p = partner_.at(z);
  for (Vertex o = 0; o < p.size(); ++o) {
    if (p[o] != kNone && o < p[o]) out.emplace_back(o, p[o]);
  }
  return out;
}

void BipartiteGraph::connect(Vertex p, Vertex q) {
  if (p >= left_count_ || q >= right_count()) throw invalid_input("bipartite edge out of range");
  graph_.insert_edge({p, right_vertex(q)});
}

}  // namespace klab

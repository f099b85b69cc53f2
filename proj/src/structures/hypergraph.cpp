#include "klab/structures/hypergraph.hpp"

#include <algorithm>
#include <string>

#include <boost/container_hash/hash.hpp>

#include "klab/error.hpp"

namespace klab {

std::size_t EdgeHash::operator()(const Edge& e) const noexcept {
  return boost::hash_range(e.begin(), e.end());
}

Hypergraph::Hypergraph(int arity, std::size_t vertex_count)
    : arity_(arity), vertex_count_(vertex_count), degree_(vertex_count, 0), empty_(vertex_count) {
  if (arity < 2) throw invalid_input("hypergraph arity must be >= 2, got " + std::to_string(arity));
}

Hypergraph Hypergraph::from_edges(int arity, std::size_t vertex_count, const std::vector<Edge>& edges) {
  Hypergraph h(arity, vertex_count);
  for (const auto& e : edges) {
    if (!h.insert_edge(e)) throw invalid_input("duplicate edge");
  }
  return h;
}

Edge Hypergraph::canonical(Edge edge) const {
  if (edge.size() != static_cast<std::size_t>(arity_)) {
    throw invalid_input("edge has " + std::to_string(edge.size()) + " vertices, arity is " +
                        std::to_string(arity_));
  }
  std::sort(edge.begin(), edge.end());
  if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
    throw invalid_input("edge repeats a vertex");
  }
  if (edge.back() >= vertex_count_) throw invalid_input("edge vertex out of range");
  return edge;
}

bool Hypergraph::has_edge(std::span<const Vertex> vertices) const {
  if (vertices.size() != static_cast<std::size_t>(arity_)) return false;
  Edge sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= vertex_count_) return false;
  const Vertex last = sorted.back();
  sorted.pop_back();
  return link(sorted).test(last);
}

const VertexSet& Hypergraph::link(std::span<const Vertex> sigma) const {
  const auto it = links_.find(Edge(sigma.begin(), sigma.end()));
  return it == links_.end() ? empty_ : it->second;
}

const VertexSet& Hypergraph::neighbors(Vertex v) const {
  if (arity_ != 2) throw invalid_input("neighbors() requires a graph (arity 2)");
  const Vertex key[1] = {v};
  return link(key);
}

VertexSet& Hypergraph::mutable_link(const Edge& sigma) {
  auto [it, inserted] = links_.try_emplace(sigma, vertex_count_);
  return it->second;
}

bool Hypergraph::insert_edge(Edge edge) {
  edge = canonical(std::move(edge));
  if (!edges_.insert(edge).second) return false;
  Edge sigma;
  sigma.reserve(edge.size() - 1);
  for (std::size_t skip = 0; skip < edge.size(); ++skip) {
    sigma.clear();
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i != skip) sigma.push_back(edge[i]);
    }
    mutable_link(sigma).set(edge[skip]);
    ++degree_[edge[skip]];
  }
  return true;
}

bool Hypergraph::erase_edge(const Edge& edge_in) {
  const Edge edge = canonical(edge_in);
  if (edges_.erase(edge) == 0) return false;
  Edge sigma;
  for (std::size_t skip = 0; skip < edge.size(); ++skip) {
    sigma.clear();
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i != skip) sigma.push_back(edge[i]);
    }
    auto it = links_.find(sigma);
    it->second.reset(edge[skip]);
    if (it->second.none()) links_.erase(it);
    --degree_[edge[skip]];
  }
  return true;
}

Vertex Hypergraph::add_vertex() {
  const auto v = static_cast<Vertex>(vertex_count_);
  ++vertex_count_;
  for (auto& [sigma, set] : links_) set.resize(vertex_count_);
  degree_.push_back(0);
  empty_ = VertexSet(vertex_count_);
  return v;
}

}  // namespace klab

#include "klab/structures/reducts.hpp"

#include <algorithm>

#include "klab/error.hpp"

namespace klab {

GraphReduct hyper_to_graph(const Hypergraph& h, std::span<const Vertex> anchors) {
  const auto r = static_cast<std::size_t>(h.arity());
  if (anchors.size() != r - 2) throw invalid_input("hyper_to_graph needs exactly r-2 anchor vertices");
  std::vector<Vertex> sorted(anchors.begin(), anchors.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw invalid_input("hyper_to_graph anchors must be distinct");
  }
  for (Vertex c : sorted) {
    if (c >= h.vertex_count()) throw invalid_input("hyper_to_graph anchor out of range");
  }

  GraphReduct out{Hypergraph(2, h.vertex_count() - sorted.size()), {}};
  std::vector<Vertex> index(h.vertex_count(), ~Vertex{0});
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (std::binary_search(sorted.begin(), sorted.end(), v)) continue;
    index[v] = static_cast<Vertex>(out.provenance.size());
    out.provenance.push_back(v);
  }
  for (const auto& e : h.edges()) {
    if (!std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) continue;
    std::vector<Vertex> rest;
    std::set_difference(e.begin(), e.end(), sorted.begin(), sorted.end(), std::back_inserter(rest));
    out.graph.insert_edge({index[rest[0]], index[rest[1]]});
  }
  return out;
}

BipartiteReduct tournament_to_bipartite(const Tournament& t, Vertex apex) {
  if (apex >= t.vertex_count()) throw invalid_input("tournament apex out of range");
  std::vector<Vertex> p, q;
  for (Vertex b = 0; b < t.vertex_count(); ++b) {
    if (b == apex) continue;
    (t.beats(apex, b) ? p : q).push_back(b);
  }
  BipartiteReduct out{BipartiteGraph(p.size(), q.size()), p, q};
  for (Vertex i = 0; i < p.size(); ++i) {
    for (Vertex j = 0; j < q.size(); ++j) {
      if (t.beats(p[i], q[j])) out.graph.connect(i, j);
    }
  }
  return out;
}

BipartiteReduct feq_to_bipartite(const Feq2Structure& f, Vertex apex) {
  if (apex >= f.object_count()) throw invalid_input("feq2 apex must be an object");
  std::vector<Vertex> p, q;
  for (Vertex b = 0; b < f.object_count(); ++b) {
    if (b != apex) p.push_back(b);
  }
  for (Vertex z = 0; z < f.parameter_count(); ++z) q.push_back(z);
  BipartiteReduct out{BipartiteGraph(p.size(), q.size()), p, q};
  for (Vertex z = 0; z < q.size(); ++z) {
    if (const auto mate = f.partner(z, apex)) {
      const auto pos = static_cast<Vertex>(std::lower_bound(p.begin(), p.end(), *mate) - p.begin());
      out.graph.connect(pos, z);
    }
  }
  return out;
}

}  // namespace klab

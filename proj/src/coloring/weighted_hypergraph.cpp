#include "klab/coloring/weighted_hypergraph.hpp"

#include <algorithm>
#include <string>

#include "klab/error.hpp"

namespace klab {

WeightedHypergraph::WeightedHypergraph(std::size_t vertex_count, int arity) : n_(vertex_count), r_(arity) {
  if (arity < 1) throw invalid_input("weighted hypergraph arity must be at least 1");
}

Edge WeightedHypergraph::canonical(Edge edge) const {
  if (edge.size() != static_cast<std::size_t>(r_)) {
    throw invalid_input("weighted edge has " + std::to_string(edge.size()) + " vertices, expected " +
                        std::to_string(r_));
  }
  std::sort(edge.begin(), edge.end());
  if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) throw invalid_input("weighted edge repeats a vertex");
  if (!edge.empty() && edge.back() >= n_) throw invalid_input("weighted edge vertex out of range");
  return edge;
}

void WeightedHypergraph::set_weight(Edge edge, const Rational& weight) {
  if (weight < 0) throw invalid_input("negative weight");
  edge = canonical(std::move(edge));
  auto it = weights_.find(edge);
  if (it != weights_.end()) {
    total_ -= it->second;
    weights_.erase(it);
  }
  if (weight != 0) {
    weights_.emplace(std::move(edge), weight);
    total_ += weight;
  }
}

void WeightedHypergraph::add_weight(Edge edge, const Rational& weight) {
  edge = canonical(std::move(edge));
  set_weight(edge, this->weight(edge) + weight);
}

Rational WeightedHypergraph::weight(Edge edge) const {
  auto it = weights_.find(canonical(std::move(edge)));
  return it == weights_.end() ? Rational(0) : it->second;
}

nlohmann::json to_json(const WeightedHypergraph& h) {
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& [edge, w] : h.weights()) {
    auto q = rational_to_json(w);
    q.erase("decimal");
    weights.push_back(nlohmann::json::array({nlohmann::json(edge), q}));
  }
  return {{"n", h.vertex_count()}, {"r", h.arity()}, {"weights", weights}};
}

WeightedHypergraph weighted_hypergraph_from_json(const nlohmann::json& j) {
  try {
    WeightedHypergraph h(j.at("n").get<std::size_t>(), j.at("r").get<int>());
    for (const auto& entry : j.at("weights")) {
      if (!entry.is_array() || entry.size() != 2) throw schema_error("weight entries are [edge, weight] pairs");
      auto edge = entry[0].get<Edge>();
      if (!std::is_sorted(edge.begin(), edge.end())) throw schema_error("weighted edges must be sorted ascending");
      const Edge key = edge;
      if (h.weights().count(key) != 0) throw schema_error("duplicate weighted edge");
      h.set_weight(std::move(edge), rational_from_json(entry[1]));
    }
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw schema_error(std::string("weighted hypergraph JSON: ") + e.what());
  } catch (const invalid_input& e) {
    throw schema_error(std::string("weighted hypergraph JSON: ") + e.what());
  }
}

}  // namespace klab

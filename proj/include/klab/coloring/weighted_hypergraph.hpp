#pragma once

#include <cstddef>
#include <map>

#include <json.hpp>

#include "klab/rational.hpp"
#include "klab/structures/hypergraph.hpp"

namespace klab {

/// Weights on the r-subsets of {0..n-1}; absent subsets weigh 0. w(V) is kept up to date.
class WeightedHypergraph {
 public:
  WeightedHypergraph(std::size_t vertex_count, int arity);

  std::size_t vertex_count() const noexcept { return n_; }
  int arity() const noexcept { return r_; }
  const std::map<Edge, Rational>& weights() const noexcept { return weights_; }
  const Rational& total_weight() const noexcept { return total_; }

  /// Canonicalizes `edge`; weight 0 removes it. Throws invalid_input on malformed edges or
  /// negative weights.
  void set_weight(Edge edge, const Rational& weight);
  void add_weight(Edge edge, const Rational& weight);
  Rational weight(Edge edge) const;

  friend bool operator==(const WeightedHypergraph&, const WeightedHypergraph&) = default;

 private:
  Edge canonical(Edge edge) const;
  std::size_t n_;
  int r_;
  std::map<Edge, Rational> weights_;
  Rational total_ = 0;
};

/// {"n":..,"r":..,"weights":[[[v1,..,vr],{"num":a,"den":b}],...]}
nlohmann::json to_json(const WeightedHypergraph& h);
WeightedHypergraph weighted_hypergraph_from_json(const nlohmann::json& j);

}  // namespace klab

#pragma once

#include <functional>
#include <span>
#include <string>

#include "klab/logic/formula.hpp"
#include "klab/structures/hypergraph.hpp"

namespace klab {

/// A global 0/1 type given as a decision rule on instances phi(x; b).
///   p_E (graphs): phi(x; b) belongs iff some DNF disjunct with no positive E(x, y_i) and no
///                 x = y_i has its parameter part true at b.
///   p_R (r-graphs): contains !R(x1..x_{r-1}, b) & distinct(x) for every b; decides exactly
///                 that formula (up to DNF equivalence) and its negation.
class TypeOracle {
 public:
  using Decider = std::function<bool(std::span<const Vertex> params)>;

  static TypeOracle p_E();
  static TypeOracle p_R();

  const std::string& name() const noexcept { return name_; }

  /// Prepares the decision rule for one formula over `host` (which must outlive the result).
  /// Throws fragment_error when the oracle cannot decide the formula.
  Decider bind(const PhiPartition& phi, const Hypergraph& host) const;

 private:
  enum class Kind { graph, hypergraph };
  TypeOracle(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  Kind kind_;
  std::string name_;
};

}  // namespace klab

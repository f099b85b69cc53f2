#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "klab/logic/formula.hpp"
#include "klab/rational.hpp"
#include "klab/structures/hypergraph.hpp"

namespace klab {

using Tuple = std::vector<Vertex>;

struct PointMass {
  Tuple point;
  Rational weight;

  friend bool operator==(const PointMass&, const PointMass&) = default;
};

inline constexpr std::size_t kDefaultPowerCap = 1'000'000;

/// Finitely supported probability measure on tuples of host vertices. The support is sorted by
/// tuple, duplicates merged, zero weights dropped, and the weights sum to exactly 1.
class FiniteMeasure {
 public:
  using Host = std::shared_ptr<const Hypergraph>;

  static FiniteMeasure dirac(Host host, Tuple point);
  /// Av of the listed points; a point listed twice gets twice the weight.
  static FiniteMeasure average(Host host, const std::vector<Tuple>& points);
  /// Weights must be nonnegative and sum to 1.
  static FiniteMeasure convex(Host host, std::vector<PointMass> masses);

  const Host& host() const noexcept { return host_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<PointMass>& support() const noexcept { return support_; }

  Rational mass(const std::function<bool(std::span<const Vertex>)>& predicate) const;

  friend bool operator==(const FiniteMeasure& a, const FiniteMeasure& b);

 private:
  FiniteMeasure(Host host, std::size_t arity, std::vector<PointMass> support);
  Host host_;
  std::size_t arity_ = 0;
  std::vector<PointMass> support_;
};

inline FiniteMeasure make_average(FiniteMeasure::Host host, const std::vector<Tuple>& points) {
  return FiniteMeasure::average(std::move(host), points);
}

/// mu(phi(x; params)). x_i reads coordinate i of the support tuples, so phi may use at most
/// mu.arity() object variables.
Rational mu_eval(const FiniteMeasure& mu, const Formula& phi, std::span<const Vertex> params);
/// As above; the declared object arity must equal mu.arity().
Rational mu_eval(const FiniteMeasure& mu, const PhiPartition& phi, std::span<const Vertex> params);

/// Morley product on the grid: support (a, b) with weight mu(a) nu(b). Hosts must agree.
FiniteMeasure product(const FiniteMeasure& mu, const FiniteMeasure& nu);
/// n-fold product; throws cap_exceeded when the support would exceed `cap` tuples.
FiniteMeasure power(const FiniteMeasure& mu, std::size_t n, std::size_t cap = kDefaultPowerCap);
/// Restriction to the support tuples satisfying `in_x`, renormalized. Throws zero_mass.
FiniteMeasure localize(const FiniteMeasure& mu, const std::function<bool(std::span<const Vertex>)>& in_x);

}  // namespace klab

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "klab/measures/finite_measure.hpp"
#include "klab/measures/type_oracle.hpp"
#include "klab/rational.hpp"

namespace klab {

/// All tuples of `arity` entries drawn from `vertices`, in lexicographic order of positions.
struct ParamDomain {
  std::vector<Vertex> vertices;
  std::size_t arity = 1;

  static ParamDomain all(const Hypergraph& host, std::size_t arity);
  std::size_t size() const;  // saturates at SIZE_MAX
  Tuple at(std::size_t index) const;
};

struct ScanMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  static ScanMode full() { return {}; }
  static ScanMode sampled(std::uint64_t seed, std::size_t count) { return {false, seed, count}; }
};

struct ApproxReport {
  Rational epsilon_target;
  Rational sup_error;
  Tuple argmax_params;
  std::optional<Rational> certified_bound;
  std::size_t samples_scanned = 0;
  bool exhaustive = true;

  nlohmann::json to_json() const;
};

/// max over b in the domain of |target(b) - Av_points(phi(x; b))|. Ties go to the
/// lexicographically least b. Exhaustive mode scans the whole domain (in parallel, honouring
/// KEISLER_LAB_THREADS); sampled mode draws `count` tuples with a seeded generator.
ApproxReport sup_error(const std::function<Rational(std::span<const Vertex>)>& target,
                       const Hypergraph& host, const std::vector<Tuple>& points, const PhiPartition& phi,
                       const ParamDomain& domain, ScanMode mode, const Rational& epsilon_target);

ApproxReport sup_error(const TypeOracle& oracle, const Hypergraph& host, const std::vector<Tuple>& points,
                       const PhiPartition& phi, const ParamDomain& domain, ScanMode mode,
                       const Rational& epsilon_target);

ApproxReport sup_error(const FiniteMeasure& target, const std::vector<Tuple>& points, const PhiPartition& phi,
                       const ParamDomain& domain, ScanMode mode, const Rational& epsilon_target);

/// Av_points(phi(x; params)) as an exact count over points.size().
std::size_t satisfying_count(const Hypergraph& host, const std::vector<Tuple>& points, const Formula& phi,
                             std::span<const Vertex> params);

}  // namespace klab

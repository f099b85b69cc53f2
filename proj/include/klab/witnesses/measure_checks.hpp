#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "klab/measures/finite_measure.hpp"
#include "klab/witnesses/report.hpp"

namespace klab {

/// Random graph on n vertices, each pair an edge with probability 1/2.
Hypergraph random_graph(std::size_t n, std::mt19937_64& rng);

/// Convex combination of up to `max_support` random tuples with random integer weights.
FiniteMeasure random_measure(const FiniteMeasure::Host& host, std::size_t arity, std::size_t max_support,
                             std::mt19937_64& rng);

/// Seeded self-test of the measure calculus on `trials` random hosts with at most 6 vertices:
/// normalization, the product grid identity, associativity of the product, localization, and
/// the product-of-approximations bound |Av_grid - (mu x nu)| <= e1 + e2.
WitnessReport measure_self_check(std::uint64_t seed, std::size_t trials);

std::vector<Certification> recheck_measures(const nlohmann::json& witness, std::uint64_t seed);

}  // namespace klab

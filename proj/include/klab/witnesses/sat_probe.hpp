#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "klab/measures/finite_measure.hpp"
#include "klab/structures/hypergraph.hpp"
#include "klab/witnesses/report.hpp"

namespace klab {

/// First (in lexicographic order) tuple of r-1 distinct vertices of M, listed ascending, with
/// !R(a, b) for every b in params.
std::optional<Tuple> find_avoiding_tuple(const Hypergraph& ambient, std::span<const Vertex> M,
                                         std::span<const Vertex> params);

/// `trials` parameter sets of `per_trial` distinct vertices drawn from outside M (from all
/// vertices when M covers the ambient).
std::vector<std::vector<Vertex>> random_parameter_sets(const Hypergraph& ambient, std::span<const Vertex> M,
                                                       std::size_t per_trial, std::size_t trials,
                                                       std::uint64_t seed);

/// Runs find_avoiding_tuple on every parameter set. Missing witnesses are data, reported in the
/// success rate; the certifications cover the returned witnesses.
WitnessReport sat_probe(const Hypergraph& ambient, std::vector<Vertex> M,
                        const std::vector<std::vector<Vertex>>& parameter_sets);

std::vector<Certification> recheck_sat_probe(const nlohmann::json& witness, const Hypergraph& ambient);

}  // namespace klab

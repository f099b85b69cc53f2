#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "klab/structures/hypergraph.hpp"
#include "klab/witnesses/report.hpp"

namespace klab {

/// Appends 2q isolated vertices a_1..a_2q (realizations of p_E over the ambient) and a vertex b
/// adjacent to exactly the even-indexed a_i, then certifies the alternation and K_s-freeness.
/// q = 0 produces a report without any extension. Throws invalid_input when the ambient graph
/// is not K_s-free.
WitnessReport order_witness(const Hypergraph& ambient, std::size_t s, std::size_t q);

/// The ambient graph extended as recorded in an order report.
Hypergraph order_extension(const nlohmann::json& witness, const Hypergraph& ambient);

std::vector<Certification> recheck_order(const nlohmann::json& witness, const Hypergraph& ambient);

}  // namespace klab

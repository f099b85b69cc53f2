#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "klab/logic/formula.hpp"
#include "klab/rational.hpp"
#include "klab/structures/hypergraph.hpp"
#include "klab/structures/search.hpp"
#include "klab/witnesses/report.hpp"

namespace klab {

/// Embeds G into the K_s-free ambient graph and certifies that its vertices approximate p_E on
/// phi(x; y) within epsilon, together with |Z| <= l + k alpha_s(G) for every parameter tuple
/// where the chosen disjunct's parameter part holds. When no disjunct of phi avoids positive
/// E(x, y_i) and x = y_i the construction runs on !phi.
///
/// Throws precondition_failed ("n*epsilon > 2*l" or "2*k*alpha_s(G) < epsilon*n"),
/// embedding_not_found, fragment_error, or invalid_input (ambient not K_s-free).
WitnessReport fam_witness(const PhiPartition& phi, const Rational& epsilon, const Hypergraph& ambient,
                          const Hypergraph& g, std::size_t s, std::uint64_t budget = kDefaultSearchBudget);

/// Recomputes the certifications of a fam report from its witness payload and the inputs.
std::vector<Certification> recheck_fam(const nlohmann::json& witness, const Hypergraph& ambient,
                                       const Hypergraph& g);

}  // namespace klab

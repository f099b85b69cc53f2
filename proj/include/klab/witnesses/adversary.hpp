#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "klab/measures/finite_measure.hpp"
#include "klab/structures/hypergraph.hpp"
#include "klab/witnesses/report.hpp"

namespace klab {

/// (r-1)! (r-1)^(1-r); 1/2 at r = 3.
Rational epsilon_r(int r);

/// `count` tuples of r-1 ambient vertices drawn uniformly (entries may repeat).
std::vector<Tuple> random_tuples(const Hypergraph& ambient, std::size_t count, std::uint64_t seed);

/// Given (r-1)-tuples in a K^r_s-free ambient (r >= 3), colours the weighted (r-1)-graph of
/// their entry sets with r-1 colours, joins a new vertex b to every split (r-1)-set, and
/// certifies that !R(a^t, b) & distinct(a^t) fails for at least an epsilon_r fraction of the
/// tuples while the extension stays K^r_s-free.
WitnessReport adversary_witness(const std::vector<Tuple>& tuples, const Hypergraph& ambient, std::size_t s);

std::vector<Certification> recheck_adversary(const nlohmann::json& witness, const Hypergraph& ambient);

}  // namespace klab

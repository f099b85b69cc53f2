#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "klab/structures/relational.hpp"
#include "klab/witnesses/report.hpp"

namespace klab {

/// sigma[i] is the column chosen in row i (0-based).
using Path = std::vector<std::size_t>;

/// Grid objects: b_{i,j} = i*k + j, column targets c_i = k*k + i.
inline Vertex grid_object(std::size_t k, std::size_t i, std::size_t j) { return static_cast<Vertex>(i * k + j); }
inline Vertex grid_target(std::size_t k, std::size_t i) { return static_cast<Vertex>(k * k + i); }

/// All k^k paths in lexicographic order. Throws cap_exceeded beyond `cap` paths.
std::vector<Path> all_paths(std::size_t k, std::size_t cap = 1'000'000);
/// `count` distinct paths drawn with a seeded generator, in lexicographic order (all paths when
/// count >= k^k).
std::vector<Path> sample_paths(std::size_t k, std::size_t count, std::uint64_t seed);

/// k^2 + k objects and one parameter per listed path z_sigma with blocks {b_{i,sigma(i)}, c_i};
/// the remaining objects of each parameter are paired in index order.
Feq2Structure build_tp2_grid(std::size_t k, const std::vector<Path>& paths);

/// (a) no parameter puts two objects of one row into the class of that row's target;
/// (b) every listed path has a parameter realizing all of its blocks.
/// Throws grid_too_small when F has fewer than k^2 + k objects.
WitnessReport tp2_witness(const Feq2Structure& f, std::size_t k, const std::vector<Path>& paths_to_check);

std::vector<Certification> recheck_tp2(const nlohmann::json& witness, const Feq2Structure& f);

}  // namespace klab

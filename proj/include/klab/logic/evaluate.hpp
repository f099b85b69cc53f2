#pragma once

#include <span>

#include "klab/logic/formula.hpp"
#include "klab/structures/hypergraph.hpp"

namespace klab {

/// objects[i-1] interprets x_i, params[j-1] interprets y_j.
struct Assignment {
  std::span<const Vertex> objects;
  std::span<const Vertex> params;
};

/// Boolean value of `f` in `host`. E needs a graph host and two terms, R needs exactly
/// `host.arity()` terms; a relation atom whose entries repeat is false. Throws invalid_input
/// for unassigned variables, vertices outside the host, or signature mismatches.
bool evaluate(const Hypergraph& host, const Formula& f, const Assignment& assignment);
bool evaluate(const Hypergraph& host, const Atom& a, const Assignment& assignment);

}  // namespace klab

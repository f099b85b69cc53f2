#pragma once

#include <random>

#include "klab/logic/formula.hpp"

namespace klab {

struct FormulaShape {
  int object_arity = 1;
  int param_arity = 1;
  /// Arity of the host relation: 2 draws E atoms, r >= 3 draws R atoms.
  int relation_arity = 2;
  int max_depth = 3;
};

/// Random quantifier-free formula over the variables allowed by `shape`.
Formula random_formula(std::mt19937_64& rng, const FormulaShape& shape);

}  // namespace klab

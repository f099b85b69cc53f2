#include "klab/logic/random_formula.hpp"

#include "klab/error.hpp"

namespace klab {
namespace {

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Term random_term(std::mt19937_64& rng, const FormulaShape& shape) {
  const int total = shape.object_arity + shape.param_arity;
  const int i = pick(rng, 1, total);
  return i <= shape.object_arity ? Term::x(i) : Term::y(i - shape.object_arity);
}

Formula random_atom(std::mt19937_64& rng, const FormulaShape& shape) {
  const int roll = pick(rng, 0, 19);
  if (roll == 0) return Formula::top();
  if (roll == 1) return Formula::bottom();
  if (roll < 8) return Formula::atom(Atom::eq(random_term(rng, shape), random_term(rng, shape)));
  std::vector<Term> terms;
  for (int i = 0; i < shape.relation_arity; ++i) terms.push_back(random_term(rng, shape));
  return Formula::atom(Atom::rel(shape.relation_arity == 2 ? "E" : "R", std::move(terms)));
}

Formula build(std::mt19937_64& rng, const FormulaShape& shape, int depth) {
  if (depth == 0 || pick(rng, 0, 3) == 0) return random_atom(rng, shape);
  switch (pick(rng, 0, 2)) {
    case 0:
      return Formula::negation(build(rng, shape, depth - 1));
    default: {
      std::vector<Formula> ops;
      const int width = pick(rng, 2, 3);
      for (int i = 0; i < width; ++i) ops.push_back(build(rng, shape, depth - 1));
      return pick(rng, 0, 1) == 0 ? Formula::conjunction(std::move(ops)) : Formula::disjunction(std::move(ops));
    }
  }
}

}  // namespace

Formula random_formula(std::mt19937_64& rng, const FormulaShape& shape) {
  if (shape.object_arity < 1 || shape.param_arity < 0 || shape.relation_arity < 2) {
    throw invalid_input("bad formula shape");
  }
  return build(rng, shape, shape.max_depth);
}

}  // namespace klab

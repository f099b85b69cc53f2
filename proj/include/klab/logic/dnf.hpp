#pragma once

#include <cstddef>
#include <vector>

#include "klab/logic/evaluate.hpp"
#include "klab/logic/formula.hpp"

namespace klab {

struct Literal {
  Atom atom;
  bool positive = true;

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Conjunction of literals, sorted and without repeats. The empty clause is true.
using Clause = std::vector<Literal>;
/// Disjunction of clauses. The empty DNF is false.
using Dnf = std::vector<Clause>;

inline constexpr std::size_t kDefaultClauseCap = 4096;

/// Equalities and relation atoms get their arguments sorted (both E and R are symmetric).
Atom canonical_atom(Atom a);

/// Equivalent DNF: negations pushed to the atoms, clauses containing a literal and its
/// complement dropped, duplicate clauses merged, clauses sorted. Throws cap_exceeded when an
/// intermediate or final result would exceed `clause_cap` clauses.
Dnf to_dnf(const Formula& f, std::size_t clause_cap = kDefaultClauseCap);

Formula to_formula(const Literal& l);
Formula to_formula(const Clause& c);
Formula to_formula(const Dnf& d);

bool evaluate(const Hypergraph& host, const Clause& c, const Assignment& assignment);
bool evaluate(const Hypergraph& host, const Dnf& d, const Assignment& assignment);

}  // namespace klab

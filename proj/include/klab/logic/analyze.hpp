#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "klab/logic/dnf.hpp"
#include "klab/logic/formula.hpp"

namespace klab {

/// One DNF clause of phi(x; y1..ym) split as
///   AND_{i in A} !E(x,y_i) & AND_{i in B} x != y_i & AND_{i in C} E(x,y_i) & AND_{i in D} x = y_i & psi(y)
/// with psi mentioning parameters only.
struct DisjunctProfile {
  std::set<int> A, B, C, D;
  Clause psi;

  std::size_t k() const noexcept { return A.size(); }
  std::size_t l() const noexcept { return B.size(); }
  friend bool operator==(const DisjunctProfile&, const DisjunctProfile&) = default;
};

struct PhiAnalysis {
  std::vector<DisjunctProfile> profiles;
  /// Indices of the profiles with C and D empty.
  std::vector<std::size_t> t_star;
};

/// Requires object arity 1 and a graph signature: every atom mentioning x1 must be x1 = y_i,
/// E(x1, y_i), or the trivially decided x1 = x1 / E(x1, x1) (folded away). Throws
/// fragment_error otherwise and invalid_input when the object arity is not 1.
PhiAnalysis analyze_phi(const PhiPartition& p, std::size_t clause_cap = kDefaultClauseCap);

/// The conjunction the profile stands for, in the variables x1 and y_i.
Formula reassemble(const DisjunctProfile& profile);
Formula reassemble(const std::vector<DisjunctProfile>& profiles);

}  // namespace klab

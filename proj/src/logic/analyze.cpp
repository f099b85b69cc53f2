#include "klab/logic/analyze.hpp"

#include <optional>

#include "klab/error.hpp"

namespace klab {
namespace {

bool mentions_object(const Atom& a) {
  for (const auto& t : a.terms) {
    if (t.sort == Term::Sort::object) return true;
  }
  return false;
}

// nullopt when the clause is unsatisfiable after folding.
std::optional<DisjunctProfile> profile_of(const Clause& clause) {
  DisjunctProfile p;
  for (const auto& lit : clause) {
    const Atom& a = lit.atom;
    if (!mentions_object(a)) {
      p.psi.push_back(lit);
      continue;
    }
    for (const auto& t : a.terms) {
      if (t.sort == Term::Sort::object && t.index != 1) {
        throw fragment_error("atom " + to_string(a) + " mentions a second object variable");
      }
    }
    const bool is_eq = a.kind == Atom::Kind::equality;
    if (!is_eq && (a.relation != "E" || a.terms.size() != 2)) {
      throw fragment_error("atom " + to_string(a) + " is outside the graph fragment");
    }
    // canonical atoms sort object terms first
    const Term& other = a.terms[1];
    if (other.sort == Term::Sort::object) {
      // x1 = x1 is true, E(x1, x1) is false
      if (is_eq != lit.positive) return std::nullopt;
      continue;
    }
    auto& target = is_eq ? (lit.positive ? p.D : p.B) : (lit.positive ? p.C : p.A);
    target.insert(other.index);
  }
  return p;
}

}  // namespace

PhiAnalysis analyze_phi(const PhiPartition& p, std::size_t clause_cap) {
  if (p.object_arity != 1) {
    throw invalid_input("disjunct analysis needs exactly one object variable");
  }
  p.validate();
  PhiAnalysis out;
  for (const auto& clause : to_dnf(p.formula, clause_cap)) {
    auto profile = profile_of(clause);
    if (!profile) continue;
    if (profile->C.empty() && profile->D.empty()) out.t_star.push_back(out.profiles.size());
    out.profiles.push_back(std::move(*profile));
  }
  return out;
}

Formula reassemble(const DisjunctProfile& profile) {
  std::vector<Formula> parts;
  const auto edge = [](int i) { return Formula::atom(Atom::rel("E", {Term::x(1), Term::y(i)})); };
  const auto eq = [](int i) { return Formula::atom(Atom::eq(Term::x(1), Term::y(i))); };
  for (int i : profile.A) parts.push_back(Formula::negation(edge(i)));
  for (int i : profile.B) parts.push_back(Formula::negation(eq(i)));
  for (int i : profile.C) parts.push_back(edge(i));
  for (int i : profile.D) parts.push_back(eq(i));
  if (!profile.psi.empty()) parts.push_back(to_formula(profile.psi));
  return Formula::conjunction(std::move(parts));
}

Formula reassemble(const std::vector<DisjunctProfile>& profiles) {
  std::vector<Formula> parts;
  for (const auto& p : profiles) parts.push_back(reassemble(p));
  return Formula::disjunction(std::move(parts));
}

}  // namespace klab

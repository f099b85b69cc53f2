#include "klab/logic/dnf.hpp"

#include <algorithm>
#include <string>

#include "klab/error.hpp"

namespace klab {
namespace {

void check_cap(std::size_t size, std::size_t cap) {
  if (size > cap) {
    throw cap_exceeded("DNF has more than " + std::to_string(cap) + " clauses");
  }
}

void normalize(Dnf& d) {
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
}

bool contradictory(const Clause& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i].atom == c[i + 1].atom && c[i].positive != c[i + 1].positive) return true;
  }
  return false;
}

Dnf product(const Dnf& a, const Dnf& b, std::size_t cap) {
  Dnf out;
  for (const auto& ca : a) {
    for (const auto& cb : b) {
      Clause merged;
      std::set_union(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(merged));
      if (contradictory(merged)) continue;
      out.push_back(std::move(merged));
      check_cap(out.size(), cap);
    }
  }
  normalize(out);
  return out;
}

Dnf convert(const Formula& f, bool positive, std::size_t cap) {
  switch (f.kind()) {
    case Formula::Kind::truth:
      return positive ? Dnf{Clause{}} : Dnf{};
    case Formula::Kind::falsity:
      return positive ? Dnf{} : Dnf{Clause{}};
    case Formula::Kind::atom:
      return Dnf{Clause{Literal{canonical_atom(f.atom_value()), positive}}};
    case Formula::Kind::negation:
      return convert(f.operands().front(), !positive, cap);
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      const bool as_product = (f.kind() == Formula::Kind::conjunction) == positive;
      if (as_product) {
        Dnf acc{Clause{}};
        for (const auto& g : f.operands()) {
          acc = product(acc, convert(g, positive, cap), cap);
          if (acc.empty()) break;
        }
        return acc;
      }
      Dnf acc;
      for (const auto& g : f.operands()) {
        Dnf part = convert(g, positive, cap);
        acc.insert(acc.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        normalize(acc);
        check_cap(acc.size(), cap);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

Atom canonical_atom(Atom a) {
  std::sort(a.terms.begin(), a.terms.end());
  return a;
}

Dnf to_dnf(const Formula& f, std::size_t clause_cap) {
  Dnf d = convert(f, true, clause_cap);
  normalize(d);
  return d;
}

Formula to_formula(const Literal& l) {
  Formula a = Formula::atom(l.atom);
  return l.positive ? a : Formula::negation(std::move(a));
}

Formula to_formula(const Clause& c) {
  std::vector<Formula> parts;
  for (const auto& l : c) parts.push_back(to_formula(l));
  return Formula::conjunction(std::move(parts));
}

Formula to_formula(const Dnf& d) {
  std::vector<Formula> parts;
  for (const auto& c : d) parts.push_back(to_formula(c));
  return Formula::disjunction(std::move(parts));
}

bool evaluate(const Hypergraph& host, const Clause& c, const Assignment& assignment) {
  for (const auto& l : c) {
    if (evaluate(host, l.atom, assignment) != l.positive) return false;
  }
  return true;
}

bool evaluate(const Hypergraph& host, const Dnf& d, const Assignment& assignment) {
  for (const auto& c : d) {
    if (evaluate(host, c, assignment)) return true;
  }
  return false;
}

}  // namespace klab

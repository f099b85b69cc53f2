#include "klab/logic/evaluate.hpp"

#include <array>
#include <string>

#include "klab/error.hpp"

namespace klab {
namespace {

Vertex lookup(const Hypergraph& host, const Term& t, const Assignment& a) {
  const auto& values = t.sort == Term::Sort::object ? a.objects : a.params;
  if (t.index < 1 || static_cast<std::size_t>(t.index) > values.size()) {
    throw invalid_input("no value assigned to " + to_string(t));
  }
  const Vertex v = values[t.index - 1];
  if (v >= host.vertex_count()) {
    throw invalid_input(to_string(t) + " is assigned vertex " + std::to_string(v) + " outside the host");
  }
  return v;
}

}  // namespace

bool evaluate(const Hypergraph& host, const Atom& a, const Assignment& assignment) {
  if (a.kind == Atom::Kind::equality) {
    return lookup(host, a.terms[0], assignment) == lookup(host, a.terms[1], assignment);
  }
  const std::size_t arity = static_cast<std::size_t>(host.arity());
  if (a.relation == "E" && host.arity() != 2) {
    throw invalid_input("E is the graph relation but the host has arity " + std::to_string(arity));
  }
  if (a.terms.size() != arity) {
    throw invalid_input(a.relation + " has " + std::to_string(a.terms.size()) + " arguments; the host arity is " +
                        std::to_string(arity));
  }
  std::array<Vertex, 16> small{};
  std::vector<Vertex> large;
  Vertex* tuple = small.data();
  if (arity > small.size()) {
    large.resize(arity);
    tuple = large.data();
  }
  for (std::size_t i = 0; i < arity; ++i) tuple[i] = lookup(host, a.terms[i], assignment);
  return host.has_edge(std::span<const Vertex>(tuple, arity));
}

bool evaluate(const Hypergraph& host, const Formula& f, const Assignment& assignment) {
  switch (f.kind()) {
    case Formula::Kind::truth:
      return true;
    case Formula::Kind::falsity:
      return false;
    case Formula::Kind::atom:
      return evaluate(host, f.atom_value(), assignment);
    case Formula::Kind::negation:
      return !evaluate(host, f.operands().front(), assignment);
    case Formula::Kind::conjunction:
      for (const auto& g : f.operands()) {
        if (!evaluate(host, g, assignment)) return false;
      }
      return true;
    case Formula::Kind::disjunction:
      for (const auto& g : f.operands()) {
        if (evaluate(host, g, assignment)) return true;
      }
      return false;
  }
  return false;
}

}  // namespace klab

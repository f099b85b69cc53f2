#include "klab/logic/formula.hpp"

#include <algorithm>

#include "klab/error.hpp"

namespace klab {

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::truth, {}, {}}));
  return t;
}

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::falsity, {}, {}}));
  return f;
}

Formula Formula::atom(Atom a) {
  for (const auto& t : a.terms) {
    if (t.index < 1) throw invalid_input("variable indices start at 1");
  }
  if (a.kind == Atom::Kind::equality && a.terms.size() != 2) throw invalid_input("equality takes two terms");
  if (a.kind == Atom::Kind::relation && a.terms.empty()) throw invalid_input("relation atom needs terms");
  return Formula(std::make_shared<const Node>(Node{Kind::atom, std::move(a), {}}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, {}, {std::move(f)}}));
}

Formula Formula::conjunction(std::vector<Formula> operands) {
  if (operands.empty()) return top();
  if (operands.size() == 1) return std::move(operands.front());
  return Formula(std::make_shared<const Node>(Node{Kind::conjunction, {}, std::move(operands)}));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
  if (operands.empty()) return bottom();
  if (operands.size() == 1) return std::move(operands.front());
  return Formula(std::make_shared<const Node>(Node{Kind::disjunction, {}, std::move(operands)}));
}

namespace {

int max_index(const Formula& f, Term::Sort sort) {
  int best = 0;
  if (f.kind() == Formula::Kind::atom) {
    for (const auto& t : f.atom_value().terms) {
      if (t.sort == sort) best = std::max(best, t.index);
    }
  }
  for (const auto& c : f.operands()) best = std::max(best, max_index(c, sort));
  return best;
}

Formula map_terms(const Formula& f, const auto& fn) {
  switch (f.kind()) {
    case Formula::Kind::truth:
    case Formula::Kind::falsity:
      return f;
    case Formula::Kind::atom: {
      Atom a = f.atom_value();
      for (auto& t : a.terms) t = fn(t);
      return Formula::atom(std::move(a));
    }
    case Formula::Kind::negation:
      return Formula::negation(map_terms(f.operands().front(), fn));
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      std::vector<Formula> ops;
      ops.reserve(f.operands().size());
      for (const auto& c : f.operands()) ops.push_back(map_terms(c, fn));
      return f.kind() == Formula::Kind::conjunction ? Formula::conjunction(std::move(ops))
                                                    : Formula::disjunction(std::move(ops));
    }
  }
  return f;
}

}  // namespace

int Formula::max_object_index() const { return max_index(*this, Term::Sort::object); }
int Formula::max_param_index() const { return max_index(*this, Term::Sort::param); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Formula::Kind::atom) return a.atom_value() == b.atom_value();
  return a.operands() == b.operands();
}

PhiPartition PhiPartition::infer(Formula f) {
  const int objects = std::max(1, f.max_object_index());
  const int params = f.max_param_index();
  return {std::move(f), objects, params};
}

void PhiPartition::validate() const {
  if (object_arity < 1) throw invalid_input("object arity must be at least 1");
  if (param_arity < 0) throw invalid_input("parameter arity must be non-negative");
  if (formula.max_object_index() > object_arity) throw invalid_input("formula uses an undeclared object variable");
  if (formula.max_param_index() > param_arity) throw invalid_input("formula uses an undeclared parameter variable");
}

std::string to_string(const Term& t) {
  return (t.sort == Term::Sort::object ? "x" : "y") + std::to_string(t.index);
}

std::string to_string(const Atom& a) {
  if (a.kind == Atom::Kind::equality) return to_string(a.terms[0]) + " = " + to_string(a.terms[1]);
  std::string out = a.relation + "(";
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(a.terms[i]);
  }
  return out + ")";
}

namespace {

std::string render(const Formula& f);

// Operand of a connective: nested connectives are parenthesized so that parsing the output
// rebuilds exactly the same tree.
std::string render_operand(const Formula& f) {
  const auto k = f.kind();
  if (k == Formula::Kind::conjunction || k == Formula::Kind::disjunction) return "(" + render(f) + ")";
  return render(f);
}

std::string render(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::truth:
      return "true";
    case Formula::Kind::falsity:
      return "false";
    case Formula::Kind::atom:
      return to_string(f.atom_value());
    case Formula::Kind::negation: {
      const auto& inner = f.operands().front();
      if (inner.kind() == Formula::Kind::atom && inner.atom_value().kind == Atom::Kind::equality) {
        const auto& t = inner.atom_value().terms;
        return to_string(t[0]) + " != " + to_string(t[1]);
      }
      return "!" + render_operand(inner);
    }
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      const char* sep = f.kind() == Formula::Kind::conjunction ? " & " : " | ";
      std::string out;
      for (std::size_t i = 0; i < f.operands().size(); ++i) {
        if (i > 0) out += sep;
        out += render_operand(f.operands()[i]);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

std::string to_string(const Formula& f) { return render(f); }

Formula objects_to_params(const Formula& f, int keep, int count, int offset) {
  return map_terms(f, [&](Term t) {
    if (t.sort == Term::Sort::object && t.index > keep && t.index <= keep + count) {
      return Term::y(offset + (t.index - keep));
    }
    return t;
  });
}

Formula rename_terms(const Formula& f, const std::function<Term(const Term&)>& fn) { return map_terms(f, fn); }

Formula swap_sorts(const Formula& f) {
  return map_terms(f, [](Term t) {
    t.sort = t.sort == Term::Sort::object ? Term::Sort::param : Term::Sort::object;
    return t;
  });
}

Formula hyperedge_avoidance_formula(int r) {
  if (r < 2) throw invalid_input("hyperedge formula needs r >= 2");
  std::vector<Term> terms;
  for (int i = 1; i < r; ++i) terms.push_back(Term::x(i));
  terms.push_back(Term::y(1));
  std::vector<Formula> parts{Formula::negation(Formula::atom(Atom::rel(r == 2 ? "E" : "R", terms)))};
  for (int i = 1; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) parts.push_back(Formula::negation(Formula::atom(Atom::eq(Term::x(i), Term::x(j)))));
  }
  return Formula::conjunction(std::move(parts));
}

}  // namespace klab

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace klab {

/// Object variable x_i or parameter variable y_j (indices start at 1).
struct Term {
  enum class Sort { object, param };
  Sort sort = Sort::object;
  int index = 1;

  static Term x(int i) { return {Sort::object, i}; }
  static Term y(int j) { return {Sort::param, j}; }

  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Relation atom Rel(t1,...,tk) or equality t1 = t2.
struct Atom {
  enum class Kind { relation, equality };
  Kind kind = Kind::relation;
  std::string relation;  // "E" or "R"; empty for equality
  std::vector<Term> terms;

  static Atom rel(std::string name, std::vector<Term> terms) {
    return {Kind::relation, std::move(name), std::move(terms)};
  }
  static Atom eq(Term a, Term b) { return {Kind::equality, {}, {a, b}}; }

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Immutable quantifier-free formula. Copies share structure.
class Formula {
 public:
  enum class Kind { truth, falsity, atom, negation, conjunction, disjunction };

  static Formula top();
  static Formula bottom();
  static Formula atom(Atom a);
  static Formula negation(Formula f);
  /// n-ary; a single operand is returned unchanged, zero operands give top / bottom.
  static Formula conjunction(std::vector<Formula> operands);
  static Formula disjunction(std::vector<Formula> operands);

  Kind kind() const noexcept { return node_->kind; }
  const Atom& atom_value() const { return node_->atom; }
  const std::vector<Formula>& operands() const noexcept { return node_->operands; }

  /// Largest object / parameter index occurring (0 when none).
  int max_object_index() const;
  int max_param_index() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    Atom atom;
    std::vector<Formula> operands;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A formula phi(x; y) together with the declared object / parameter arities.
struct PhiPartition {
  Formula formula;
  int object_arity = 1;
  int param_arity = 0;

  /// Arities taken from the largest indices occurring in `f` (object arity at least 1).
  static PhiPartition infer(Formula f);
  /// Throws invalid_input when a variable exceeds the declared arities.
  void validate() const;
};

/// Renders in the DSL grammar accepted by parse_formula; top/bottom print as true/false.
std::string to_string(const Formula& f);
std::string to_string(const Atom& a);
std::string to_string(const Term& t);

/// Renames object variables x_{keep+1}, ..., x_{keep+count} to y_{offset+1}, ..., y_{offset+count}
/// and leaves every other variable alone. Used to read phi(x1..xk, x_{k+1}..) as a formula
/// in x1..xk whose remaining coordinates are parameters.
Formula objects_to_params(const Formula& f, int keep, int count, int offset);

/// Applies `fn` to every term occurrence.
Formula rename_terms(const Formula& f, const std::function<Term(const Term&)>& fn);

/// Swaps the roles of x_i and y_i for i <= count (phi(x;y) to phi*(y;x)).
Formula swap_sorts(const Formula& f);

/// The formula !R(x1,...,x_{r-1},y1) & (x_i != x_j for all i < j).
Formula hyperedge_avoidance_formula(int r);

}  // namespace klab

#include <doctest.h>

#include <random>

#include "klab/error.hpp"
#include "klab/logic/analyze.hpp"
#include "klab/logic/dnf.hpp"
#include "klab/logic/evaluate.hpp"
#include "klab/logic/parser.hpp"
#include "klab/logic/random_formula.hpp"
#include "klab/structures/generators.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {

Formula E(Term a, Term b) { return Formula::atom(Atom::rel("E", {a, b})); }
Formula Eq(Term a, Term b) { return Formula::atom(Atom::eq(a, b)); }
Formula Not(Formula f) { return Formula::negation(std::move(f)); }
const Term X1 = Term::x(1), X2 = Term::x(2), Y1 = Term::y(1), Y2 = Term::y(2);

bool same_everywhere(const Hypergraph& h, const Formula& a, const Formula& b, int objects, int params) {
  bool same = true;
  oracle::for_each_assignment(h.vertex_count(), objects, params, [&](const auto& xs, const auto& ys) {
    if (oracle::eval(h, a, xs, ys) != oracle::eval(h, b, xs, ys)) same = false;
  });
  return same;
}

}  // namespace

TEST_CASE("parser examples") {
  CHECK(parse_formula("!E(x1,y1) & x1 != y1") == Formula::conjunction({Not(E(X1, Y1)), Not(Eq(X1, Y1))}));
  const auto r = parse_formula("!R(x1,x2,y1) & x1 != x2");
  CHECK(r == Formula::conjunction({Not(Formula::atom(Atom::rel("R", {X1, X2, Y1}))), Not(Eq(X1, X2))}));
  CHECK(r == hyperedge_avoidance_formula(3));
  try {
    parse_formula("E(x1");
    FAIL("no parse error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_formula("E(x0,y1)"), parse_error);
  CHECK_THROWS_AS(parse_formula("E(x1,y1) &"), parse_error);
  CHECK(parse_formula("true") == Formula::top());
}

TEST_CASE("print and parse round trip") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const FormulaShape shape{1 + i % 2, 1 + i % 3, i % 4 == 0 ? 3 : 2, 4};
    const auto f = random_formula(rng, shape);
    CHECK(parse_formula(to_string(f)) == f);
  }
}

TEST_CASE("evaluate examples") {
  const auto c5 = cyclic_graph(5, {1});
  const Vertex o[] = {0}, adj[] = {1}, far[] = {2};
  CHECK(evaluate(c5, Eq(X1, X1), {o, {}}));
  CHECK(evaluate(c5, E(X1, Y1), {o, adj}));
  CHECK_FALSE(evaluate(c5, E(X1, Y1), {o, far}));
  Hypergraph h(3, 4);
  h.insert_edge({0, 1, 2});
  const Vertex same[] = {0, 0}, distinct[] = {0, 1}, p[] = {2};
  const auto r = Formula::atom(Atom::rel("R", {X1, X2, Y1}));
  CHECK_FALSE(evaluate(h, r, {same, p}));
  CHECK(evaluate(h, r, {distinct, p}));
  CHECK_THROWS_AS(evaluate(c5, E(X1, Y2), {o, adj}), invalid_input);
  const Vertex out[] = {9};
  CHECK_THROWS_AS(evaluate(c5, E(X1, Y1), {o, out}), invalid_input);
  CHECK_THROWS_AS(evaluate(c5, r, {distinct, p}), invalid_input);
}

TEST_CASE("to_dnf examples") {
  const auto a = E(X1, Y1), b = E(X1, Y2);
  const Literal la{canonical_atom(a.atom_value()), true}, lb{canonical_atom(b.atom_value()), true};
  CHECK(to_dnf(a) == Dnf{{la}});
  CHECK(to_dnf(Not(Formula::conjunction({a, b}))) == Dnf{{Literal{la.atom, false}}, {Literal{lb.atom, false}}});
  const auto d = to_dnf(Formula::conjunction({Formula::disjunction({a, b}), Not(a)}));
  REQUIRE(d.size() == 1);
  Clause expected{Literal{la.atom, false}, lb};
  std::sort(expected.begin(), expected.end());
  CHECK(d[0] == expected);
  CHECK(to_dnf(Formula::bottom()).empty());
  CHECK(to_dnf(Formula::top()) == Dnf{Clause{}});
}

TEST_CASE("to_dnf cap") {
  std::vector<Formula> conj;
  for (int i = 1; i <= 13; ++i) conj.push_back(Formula::disjunction({E(X1, Term::y(i)), Eq(X1, Term::y(i))}));
  CHECK_THROWS_AS(to_dnf(Formula::conjunction(conj)), cap_exceeded);
  CHECK_NOTHROW(to_dnf(Formula::conjunction(conj), 1 << 13));
}

TEST_CASE("to_dnf is equivalent on random formulas") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const auto h = oracle::random_graph(rng, 4, 1, 2);
    const auto f = random_formula(rng, {2, 2, 2, 4});
    CHECK(same_everywhere(h, f, to_formula(to_dnf(f)), 2, 2));
  }
}

TEST_CASE("analyze_phi examples") {
  const auto phi = Formula::conjunction({Not(E(X1, Y1)), Not(Eq(X1, Y1))});
  const auto a = analyze_phi(PhiPartition{phi, 1, 1});
  REQUIRE(a.profiles.size() == 1);
  CHECK(a.profiles[0].A == std::set<int>{1});
  CHECK(a.profiles[0].B == std::set<int>{1});
  CHECK(a.profiles[0].C.empty());
  CHECK(a.profiles[0].D.empty());
  CHECK(a.profiles[0].psi.empty());
  CHECK(a.t_star == std::vector<std::size_t>{0});

  const auto pos = analyze_phi(PhiPartition{E(X1, Y1), 1, 1});
  REQUIRE(pos.profiles.size() == 1);
  CHECK(pos.profiles[0].C == std::set<int>{1});
  CHECK(pos.t_star.empty());

  const auto mixed = parse_formula("(!E(x1,y1) & E(y1,y2)) | x1 = y2");
  const auto m = analyze_phi(PhiPartition{mixed, 1, 2});
  REQUIRE(m.profiles.size() == 2);
  const auto& first = m.profiles[0].A.empty() ? m.profiles[1] : m.profiles[0];
  const auto& second = m.profiles[0].A.empty() ? m.profiles[0] : m.profiles[1];
  CHECK(first.A == std::set<int>{1});
  CHECK(first.psi == Clause{Literal{canonical_atom(Atom::rel("E", {Y1, Y2})), true}});
  CHECK(second.D == std::set<int>{2});
  CHECK(second.A.empty());
  CHECK(second.psi.empty());
  std::mt19937_64 rng(8);
  for (int i = 0; i < 5; ++i) {
    const auto h = oracle::random_graph(rng, 4, 1, 2);
    CHECK(same_everywhere(h, mixed, reassemble(m.profiles), 1, 2));
  }

  CHECK_THROWS_AS((analyze_phi(PhiPartition{E(X1, X2), 2, 0})), invalid_input);
  CHECK_THROWS_AS((analyze_phi(PhiPartition{E(X1, X2), 1, 0})), invalid_input);
  CHECK_THROWS_AS((analyze_phi(PhiPartition{Formula::atom(Atom::rel("R", {X1, Y1, Y2})), 1, 2})), fragment_error);
}

TEST_CASE("analyze_phi reassembly on random formulas") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_formula(rng, {1, 3, 2, 4});
    const auto an = analyze_phi(PhiPartition{f, 1, 3});
    const auto h = oracle::random_graph(rng, 4, 1, 2);
    CHECK(same_everywhere(h, f, reassemble(an.profiles), 1, 3));
    for (std::size_t t = 0; t < an.profiles.size(); ++t) {
      const bool in_star = an.profiles[t].C.empty() && an.profiles[t].D.empty();
      CHECK(in_star == (std::find(an.t_star.begin(), an.t_star.end(), t) != an.t_star.end()));
    }
  }
}

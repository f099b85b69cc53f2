#include <doctest.h>

#include <random>

#include "klab/error.hpp"
#include "klab/logic/evaluate.hpp"
#include "klab/logic/parser.hpp"
#include "klab/structures/cliques.hpp"
#include "klab/structures/generators.hpp"
#include "klab/structures/search.hpp"
#include "klab/witnesses/adversary.hpp"
#include "klab/witnesses/fam.hpp"
#include "klab/witnesses/measure_checks.hpp"
#include "klab/witnesses/order.hpp"
#include "klab/witnesses/sat_probe.hpp"
#include "klab/witnesses/tp2.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

const Certification& find(const WitnessReport& r, const std::string& name) {
  for (const auto& c : r.certified)
    if (c.name == name) return c;
  FAIL("missing certification " << name);
  return r.certified.front();
}

}  // namespace

TEST_CASE("report json round trip") {
  WitnessReport r;
  r.theorem = "x";
  r.certified = {certify("a", q(1, 3), "<", q(1, 2)), certify_zero("b", 2)};
  r.seed = 7;
  CHECK(r.certified[0].holds);
  CHECK_FALSE(r.certified[1].holds);
  CHECK_FALSE(r.all_hold());
  const auto back = WitnessReport::from_json(r.to_json());
  CHECK(back.certified == r.certified);
  CHECK(back.seed == r.seed);
  CHECK(back.to_json() == r.to_json());
}

TEST_CASE("fam witness on the circulant") {
  const auto ambient = random_maximal_free(120, 2, 3, 9);
  const auto g = cyclic_graph(13, {1, 5});
  const auto rep = fam_witness(PhiPartition{parse_formula("!E(x1,y1) & x1 != y1"), 1, 1}, q(4, 5), ambient, g, 3);
  CHECK(rep.all_hold());
  CHECK(find(rep, "sup_error < epsilon").lhs <= q(5, 13));
  CHECK(rep.witness["k"] == 1);
  CHECK(rep.witness["l"] == 1);
  CHECK(recheck_fam(rep.witness, ambient, g) == rep.certified);

  // independent count of Z = {a in image : !phi(a; b)} for every b
  std::vector<Vertex> image = rep.witness["embedding"].get<std::vector<Vertex>>();
  REQUIRE(image.size() == 13);
  const auto phi = parse_formula("!E(x1,y1) & x1 != y1");
  for (Vertex b = 0; b < ambient.vertex_count(); ++b) {
    std::size_t z = 0;
    for (Vertex a : image) z += oracle::eval(ambient, phi, {a}, {b}) ? 0 : 1;
    CHECK(z <= 5);
  }
}

TEST_CASE("fam preconditions") {
  const auto ambient = random_maximal_free(60, 2, 3, 4);
  const PhiPartition phi{parse_formula("!E(x1,y1) & x1 != y1"), 1, 1};
  try {
    fam_witness(phi, q(4, 5), ambient, cyclic_graph(5, {1}), 3);
    FAIL("expected precondition failure");
  } catch (const precondition_failed& e) {
    CHECK(e.which() == "2*k*alpha_s(G) < epsilon*n");
  }
  try {
    fam_witness(phi, q(1, 5), ambient, cyclic_graph(5, {1}), 3);
    FAIL("expected precondition failure");
  } catch (const precondition_failed& e) {
    CHECK(e.which() == "n*epsilon > 2*l");
  }
  CHECK_THROWS_AS(fam_witness(phi, q(4, 5), cyclic_graph(3, {1}), Hypergraph(2, 1), 3), invalid_input);
  CHECK_THROWS_AS(fam_witness(phi, q(4, 5), cyclic_graph(5, {1}), cyclic_graph(13, {1, 5}), 3), embedding_not_found);
}

TEST_CASE("fam runs on the negation when no disjunct avoids positive literals") {
  const auto ambient = random_maximal_free(120, 2, 3, 9);
  const auto rep =
      fam_witness(PhiPartition{parse_formula("E(x1,y1)"), 1, 1}, q(4, 5), ambient, cyclic_graph(13, {1, 5}), 3);
  CHECK(rep.witness["negated"] == true);
  CHECK(rep.witness["k"] == 1);
  CHECK(rep.witness["l"] == 0);
  CHECK(rep.all_hold());
}

TEST_CASE("order witness") {
  const auto ambient = random_maximal_free(30, 2, 3, 2);
  const auto one = order_witness(ambient, 3, 1);
  CHECK(one.all_hold());
  const auto ext1 = order_extension(one.witness, ambient);
  const Vertex a1 = one.witness["a"][0], a2 = one.witness["a"][1], b = one.witness["b"];
  const Vertex e1[] = {a1, b}, e2[] = {a2, b};
  CHECK_FALSE(ext1.has_edge(e1));
  CHECK(ext1.has_edge(e2));

  const auto four = order_witness(ambient, 3, 4);
  CHECK(four.all_hold());
  const auto ext = order_extension(four.witness, ambient);
  CHECK(ext.vertex_count() == 30 + 9);
  const auto as = four.witness["a"].get<std::vector<Vertex>>();
  for (std::size_t i = 0; i < as.size(); ++i) {
    const Vertex e[] = {as[i], static_cast<Vertex>(four.witness["b"])};
    CHECK(ext.has_edge(e) == ((i + 1) % 2 == 0));
  }
  CHECK_FALSE(oracle::has_clique(ext, 3));
  CHECK(recheck_order(four.witness, ambient) == four.certified);

  const auto zero = order_witness(ambient, 3, 0);
  CHECK(zero.all_hold());
  CHECK(order_extension(zero.witness, ambient) == ambient);
}

TEST_CASE("adversary witness") {
  CHECK(epsilon_r(3) == q(1, 2));
  CHECK(epsilon_r(4) == q(6, 27));
  const auto ambient = random_maximal_free(40, 3, 4, 5);

  const auto single = adversary_witness({{3, 7}}, ambient, 4);
  CHECK(single.all_hold());
  CHECK(single.witness["fraction"]["num"] == 1);
  CHECK(single.witness["fraction"]["den"] == 1);

  const auto degenerate = adversary_witness({{3, 3}}, ambient, 4);
  CHECK(degenerate.all_hold());
  CHECK(degenerate.witness["violated"] == 1);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto tuples = random_tuples(ambient, 12, seed);
    const auto rep = adversary_witness(tuples, ambient, 4);
    CHECK(rep.all_hold());
    CHECK(recheck_adversary(rep.witness, ambient) == rep.certified);
    // recount the violations directly
    const Vertex b = rep.witness["b"];
    Hypergraph ext = ambient;
    while (ext.vertex_count() <= b) ext.add_vertex();
    const auto V = rep.witness["V"].get<std::vector<Vertex>>();
    const auto chi = rep.witness["coloring"].get<std::vector<int>>();
    std::size_t split = 0;
    for (std::size_t i = 0; i < V.size(); ++i)
      for (std::size_t j = i + 1; j < V.size(); ++j)
        if (chi[i] != chi[j]) ext.insert_edge({V[i], V[j], b}), ++split;
    CHECK(rep.witness["sigma_size"] == split);
    CHECK_FALSE(oracle::has_clique(ext, 4));
    std::size_t violated = 0;
    const auto phi = hyperedge_avoidance_formula(3);
    for (const auto& t : tuples) violated += oracle::eval(ext, phi, t, {b}) ? 0 : 1;
    CHECK(q(static_cast<long>(violated), static_cast<long>(tuples.size())) >= q(1, 2));
    CHECK(rep.witness["violated"] == violated);
  }
}

TEST_CASE("sat probe") {
  const auto ambient = random_maximal_free(60, 3, 4, 3);
  std::vector<Vertex> m;
  for (Vertex v = 0; v < 40; ++v) m.push_back(v);
  CHECK(find_avoiding_tuple(ambient, m, {}) == Tuple{0, 1});
  const Vertex one[] = {0};
  CHECK_FALSE(find_avoiding_tuple(ambient, one, {}).has_value());

  const auto sets = random_parameter_sets(ambient, m, 4, 10, 6);
  for (const auto& set : sets) {
    CHECK(set.size() == 4);
    for (Vertex b : set) CHECK(b >= 40);
    const auto w = find_avoiding_tuple(ambient, m, set);
    if (!w) continue;
    for (Vertex b : set) CHECK(oracle::eval(ambient, hyperedge_avoidance_formula(3), *w, {b}));
  }
  const auto rep = sat_probe(ambient, m, sets);
  CHECK(rep.all_hold());
  CHECK(recheck_sat_probe(rep.witness, ambient) == rep.certified);
}

TEST_CASE("tp2 witness") {
  const auto paths1 = all_paths(1);
  CHECK(paths1.size() == 1);
  CHECK(tp2_witness(build_tp2_grid(1, paths1), 1, paths1).all_hold());

  const auto paths2 = all_paths(2);
  REQUIRE(paths2.size() == 4);
  const auto f2 = build_tp2_grid(2, paths2);
  const auto rep2 = tp2_witness(f2, 2, paths2);
  CHECK(rep2.all_hold());
  // explicit scan: no parameter joins two objects of a row to its target
  for (std::size_t z = 0; z < f2.parameter_count(); ++z)
    for (std::size_t i = 0; i < 2; ++i)
      CHECK_FALSE((f2.equivalent(z, grid_object(2, i, 0), grid_target(2, i)) &&
                   f2.equivalent(z, grid_object(2, i, 1), grid_target(2, i))));

  const auto f4 = build_tp2_grid(4, all_paths(4));
  const auto sample = sample_paths(4, 50, 3);
  CHECK(sample.size() == 50);
  CHECK(std::is_sorted(sample.begin(), sample.end()));
  const auto rep4 = tp2_witness(f4, 4, sample);
  CHECK(rep4.all_hold());
  CHECK(find(rep4, "row_pairs_checked").lhs == 24);
  CHECK(recheck_tp2(rep4.witness, f4) == rep4.certified);

  // a grid missing a path fails the consistency check for that path
  auto partial = all_paths(2);
  partial.pop_back();
  CHECK_FALSE(tp2_witness(build_tp2_grid(2, partial), 2, all_paths(2)).all_hold());
  CHECK_THROWS_AS(tp2_witness(f2, 3, {}), grid_too_small);
}

TEST_CASE("measure self check") {
  const auto rep = measure_self_check(5, 20);
  CHECK(rep.all_hold());
  CHECK(recheck_measures(rep.witness, 5) == rep.certified);
}

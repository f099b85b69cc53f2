#include <doctest.h>

#include <memory>
#include <random>

#include "klab/error.hpp"
#include "klab/logic/parser.hpp"
#include "klab/measures/approximation.hpp"
#include "klab/measures/finite_measure.hpp"
#include "klab/measures/type_oracle.hpp"
#include "klab/structures/generators.hpp"
#include "klab/witnesses/measure_checks.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {

FiniteMeasure::Host share(Hypergraph g) { return std::make_shared<const Hypergraph>(std::move(g)); }

Rational q(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("make_average examples") {
  const auto host = share(cyclic_graph(5, {1}));
  CHECK(make_average(host, {{2}}) == FiniteMeasure::dirac(host, {2}));
  const auto mu = make_average(host, {{0}, {1}, {0}});
  REQUIRE(mu.support().size() == 2);
  CHECK(mu.support()[0] == PointMass{{0}, q(2, 3)});
  CHECK(mu.support()[1] == PointMass{{1}, q(1, 3)});
  const Vertex zero[] = {0};
  CHECK(mu_eval(make_average(host, {{1}, {2}}), parse_formula("E(x1,y1)"), zero) == q(1, 2));
  CHECK_THROWS_AS(make_average(host, {}), invalid_input);
  CHECK_THROWS_AS(FiniteMeasure::convex(host, {{{0}, q(1, 2)}}), invalid_input);
}

TEST_CASE("mu_eval examples") {
  const auto host = share(cyclic_graph(5, {1}));
  const Vertex b[] = {1};
  CHECK(mu_eval(FiniteMeasure::dirac(host, {0}), parse_formula("E(x1,y1)"), b) == 1);
  std::mt19937_64 rng(4);
  const auto mu = random_measure(host, 2, 4, rng);
  CHECK(mu_eval(mu, parse_formula("x1 = x1"), {}) == 1);
  const auto av = make_average(host, {{0}, {1}, {2}, {3}, {4}});
  for (Vertex v = 0; v < 5; ++v) {
    const Vertex p[] = {v};
    CHECK(mu_eval(av, parse_formula("E(x1,y1)"), p) == q(2, 5));
  }
}

TEST_CASE("product and power examples") {
  const auto host = share(cyclic_graph(5, {1}));
  CHECK(product(FiniteMeasure::dirac(host, {1}), FiniteMeasure::dirac(host, {3})) ==
        FiniteMeasure::dirac(host, {1, 3}));
  const auto mu = make_average(host, {{0}, {2}}), nu = make_average(host, {{1}, {3}});
  std::size_t adjacent = 0;
  for (Vertex a : {0U, 2U})
    for (Vertex c : {1U, 3U}) {
      const Vertex e[] = {a, c};
      adjacent += host->has_edge(e) ? 1 : 0;
    }
  CHECK(mu_eval(product(mu, nu), parse_formula("E(x1,x2)"), {}) == q(static_cast<long>(adjacent), 4));
  CHECK(power(FiniteMeasure::dirac(host, {4}), 3) == FiniteMeasure::dirac(host, {4, 4, 4}));
  const auto sq = power(mu, 2);
  REQUIRE(sq.support().size() == 4);
  for (const auto& pm : sq.support()) CHECK(pm.weight == q(1, 4));
  CHECK_THROWS_AS(power(make_average(host, {{0}, {1}, {2}}), 3, 20), cap_exceeded);
}

TEST_CASE("localize examples") {
  const auto host = share(cyclic_graph(5, {1}));
  const auto is0 = [](std::span<const Vertex> t) { return t[0] == 0; };
  CHECK(localize(FiniteMeasure::dirac(host, {0}), is0) == FiniteMeasure::dirac(host, {0}));
  CHECK(localize(make_average(host, {{0}, {1}}), is0) == FiniteMeasure::dirac(host, {0}));
  CHECK_THROWS_AS(localize(FiniteMeasure::dirac(host, {1}), is0), zero_mass);
}

TEST_CASE("measure invariants on random measures") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto host = share(oracle::random_graph(rng, 2 + trial % 5, 1, 2));
    const auto mu = random_measure(host, 1, 4, rng), nu = random_measure(host, 1, 4, rng),
               la = random_measure(host, 1, 3, rng);
    Rational total = 0;
    const auto mn = product(mu, nu);
    for (const auto& pm : mn.support()) total += pm.weight;
    CHECK(total == 1);
    CHECK(product(product(mu, nu), la) == product(mu, product(nu, la)));
    const auto phi = parse_formula("E(x1,x2)");
    Rational grid = 0;
    for (const auto& a : mu.support())
      for (const auto& b : nu.support())
        if (oracle::eval(*host, phi, {a.point[0], b.point[0]}, {})) grid += a.weight * b.weight;
    CHECK(mu_eval(product(mu, nu), phi, {}) == grid);
  }
}

TEST_CASE("sup_error examples") {
  const auto c5 = cyclic_graph(5, {1});
  const PhiPartition phi{parse_formula("!E(x1,y1) & x1 != y1"), 1, 1};
  const PhiPartition taut{parse_formula("x1 = x1 | E(x1,y1)"), 1, 1};
  const auto one = [](std::span<const Vertex>) { return Rational(1); };
  const auto all = sup_error(one, c5, {{0}, {1}, {2}}, taut, ParamDomain::all(c5, 1), ScanMode::full(), q(1, 10));
  CHECK(all.sup_error == 0);
  CHECK(all.samples_scanned == 5);

  const auto single = sup_error(TypeOracle::p_E(), c5, {{0}}, phi, ParamDomain{{0}, 1}, ScanMode::full(), q(1, 2));
  CHECK(single.sup_error == 1);
  CHECK(single.argmax_params == Tuple{0});

  // the first maximizing b in lexicographic order
  const auto rep = sup_error(TypeOracle::p_E(), c5, {{0}, {2}}, phi, ParamDomain::all(c5, 1), ScanMode::full(), q(1, 2));
  Rational best = -1;
  Tuple arg;
  for (Vertex b = 0; b < 5; ++b) {
    long sat = 0;
    for (Vertex a : {0U, 2U}) sat += oracle::eval(c5, phi.formula, {a}, {b}) ? 1 : 0;
    const Rational err = abs(Rational(1) - q(sat, 2));
    if (err > best) best = err, arg = {b};
  }
  CHECK(rep.sup_error == best);
  CHECK(rep.argmax_params == arg);

  const auto sampled =
      sup_error(TypeOracle::p_E(), c5, {{0}, {2}}, phi, ParamDomain::all(c5, 1), ScanMode::sampled(3, 4), q(1, 2));
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.samples_scanned >= 1);
  CHECK(sampled.samples_scanned <= 4);
  CHECK(sampled.sup_error <= rep.sup_error);
}

TEST_CASE("type oracles") {
  const auto g = cyclic_graph(7, {1});
  const auto dec = TypeOracle::p_E().bind(PhiPartition{parse_formula("(!E(x1,y1) & E(y1,y2)) | x1 = y2"), 1, 2}, g);
  for (Vertex a = 0; a < 7; ++a)
    for (Vertex b = 0; b < 7; ++b) {
      const Vertex p[] = {a, b};
      const Vertex e[] = {a, b};
      CHECK(dec(p) == g.has_edge(e));
    }
  const auto never = TypeOracle::p_E().bind(PhiPartition{parse_formula("E(x1,y1)"), 1, 1}, g);
  const Vertex p0[] = {0};
  CHECK_FALSE(never(p0));

  const auto h = random_maximal_free(8, 3, 4, 2);
  const auto pr = TypeOracle::p_R();
  const auto avoid = pr.bind(PhiPartition{hyperedge_avoidance_formula(3), 2, 1}, h);
  CHECK(avoid(p0));
  const auto neg = pr.bind(PhiPartition{parse_formula("R(x1,x2,y1) | x1 = x2"), 2, 1}, h);
  CHECK_FALSE(neg(p0));
  CHECK_THROWS_AS(pr.bind(PhiPartition{parse_formula("R(x1,x2,y1)"), 2, 1}, h), fragment_error);
}

TEST_CASE("param domain order") {
  const ParamDomain d{{3, 5, 7}, 2};
  CHECK(d.size() == 9);
  CHECK(d.at(0) == Tuple{3, 3});
  CHECK(d.at(1) == Tuple{3, 5});
  CHECK(d.at(8) == Tuple{7, 7});
}

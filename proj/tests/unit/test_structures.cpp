#include <doctest.h>

#include <random>

#include "klab/error.hpp"
#include "klab/structures/cliques.hpp"
#include "klab/structures/generators.hpp"
#include "klab/structures/hypergraph.hpp"
#include "klab/structures/io.hpp"
#include "klab/structures/reducts.hpp"
#include "klab/structures/relational.hpp"
#include "klab/structures/search.hpp"
#include "oracles.hpp"

using namespace klab;

namespace {

Hypergraph cycle(std::size_t n) { return cyclic_graph(n, {1}); }

bool adjacent(const Hypergraph& g, Vertex u, Vertex v) {
  const Vertex e[] = {u, v};
  return g.has_edge(e);
}

// every non-edge closes a clique
bool maximal(const Hypergraph& h, std::size_t s) {
  std::vector<Vertex> idx(static_cast<std::size_t>(h.arity()));
  bool ok = true;
  const std::size_t n = h.vertex_count(), r = idx.size();
  for (std::size_t i = 0; i < r; ++i) idx[i] = static_cast<Vertex>(i);
  while (ok) {
    if (!h.has_edge(idx)) {
      Hypergraph g = h;
      g.insert_edge(idx);
      if (!oracle::has_clique(g, s)) ok = false;
    }
    std::size_t pos = r;
    while (pos > 0 && idx[pos - 1] == n - r + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < r; ++i) idx[i] = idx[i - 1] + 1;
  }
  return ok;
}

}  // namespace

TEST_CASE("hypergraph canonicalizes and rejects malformed edges") {
  Hypergraph h(3, 5);
  CHECK(h.insert_edge({4, 0, 2}));
  CHECK_FALSE(h.insert_edge({2, 4, 0}));
  CHECK(h.edges().count({0, 2, 4}) == 1);
  CHECK_THROWS_AS(h.insert_edge({1, 1, 2}), invalid_input);
  CHECK_THROWS_AS(h.insert_edge({1, 2, 5}), invalid_input);
  CHECK_THROWS_AS(h.insert_edge({1, 2}), invalid_input);
  const Vertex sigma[] = {0, 4};
  CHECK(h.link(sigma).members() == std::vector<Vertex>{2});
  CHECK(h.erase_edge({0, 2, 4}));
  CHECK(h.link(sigma).none());
  CHECK_THROWS_AS(Hypergraph::from_edges(2, 3, {{0, 1}, {1, 0}}), invalid_input);
}

TEST_CASE("is_free examples") {
  CHECK_FALSE(is_free(cyclic_graph(3, {1}), 3));
  CHECK(is_free(cycle(5), 3));
  Hypergraph k4(3, 4);
  for (const Edge& e : std::vector<Edge>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}) k4.insert_edge(e);
  CHECK_FALSE(is_free(k4, 4));
  CHECK_THROWS_AS(is_free(cycle(5), 2), invalid_input);
}

TEST_CASE("is_free agrees with brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + trial % 7;
    Hypergraph g = oracle::random_graph(rng, n, 1, 3);
    for (std::size_t s = 3; s <= 5; ++s) CHECK(is_free(g, s) == !oracle::has_clique(g, s));
  }
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h(3, 7);
    std::bernoulli_distribution coin(0.4);
    for (Vertex a = 0; a < 7; ++a)
      for (Vertex b = a + 1; b < 7; ++b)
        for (Vertex c = b + 1; c < 7; ++c)
          if (coin(rng)) h.insert_edge({a, b, c});
    CHECK(is_free(h, 4) == !oracle::has_clique(h, 4));
  }
}

TEST_CASE("alpha_s examples") {
  CHECK(alpha_s(cycle(5), 3).value == 2);
  CHECK(alpha_s(Hypergraph(2, 9), 3).value == 9);
  CHECK(alpha_s(Hypergraph(2, 9), 5).value == 9);
  CHECK(alpha_s(petersen_graph(), 3).value == 4);
  CHECK(oracle::alpha(petersen_graph(), 3) == 4);
  const auto c13 = cyclic_graph(13, {1, 5});
  CHECK(alpha_s(c13, 3).value == 4);
  CHECK(oracle::alpha(c13, 3) == 4);
}

TEST_CASE("alpha_s witness induces no K_{s-1}") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, 12, 1, 2);
    for (std::size_t s = 3; s <= 5; ++s) {
      const auto res = alpha_s(g, s);
      REQUIRE(res.witness.size() == res.value);
      Hypergraph induced(2, res.value);
      for (std::size_t i = 0; i < res.value; ++i)
        for (std::size_t j = i + 1; j < res.value; ++j)
          if (adjacent(g, res.witness[i], res.witness[j]))
            induced.insert_edge({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      CHECK_FALSE(oracle::has_clique(induced, s - 1));
      CHECK(res.value == oracle::alpha(g, s));
    }
  }
}

TEST_CASE("add_vertex_with_links examples") {
  const auto even = add_vertex_with_links(Hypergraph(2, 4), {{0}, {2}}, 3);
  REQUIRE(std::holds_alternative<Hypergraph>(even));
  const auto& g = std::get<Hypergraph>(even);
  CHECK(g.vertex_count() == 5);
  for (Vertex v = 0; v < 4; ++v) CHECK(adjacent(g, v, 4) == (v % 2 == 0));

  const auto c5 = cycle(5);
  const auto lone = add_vertex_with_links(c5, {}, 3);
  REQUIRE(std::holds_alternative<Hypergraph>(lone));
  CHECK(std::get<Hypergraph>(lone).edge_count() == 5);
  CHECK(std::get<Hypergraph>(lone).degree(5) == 0);

  const auto tri = add_vertex_with_links(Hypergraph::from_edges(2, 2, {{0, 1}}), {{0}, {1}}, 3);
  REQUIRE(std::holds_alternative<FreenessViolation>(tri));
  CHECK(std::get<FreenessViolation>(tri).clique == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("random_maximal_free examples") {
  CHECK(random_maximal_free(0, 2, 3, 1).vertex_count() == 0);
  const auto g = random_maximal_free(10, 2, 3, 1);
  CHECK_FALSE(oracle::has_clique(g, 3));
  CHECK(maximal(g, 3));
  const auto h = random_maximal_free(20, 3, 4, 7);
  CHECK(h.arity() == 3);
  CHECK_FALSE(oracle::has_clique(h, 4));
  CHECK(maximal(h, 4));
  CHECK(random_maximal_free(20, 3, 4, 7) == h);
}

TEST_CASE("cyclic_graph examples") {
  const auto c5 = cycle(5);
  CHECK(c5.edge_count() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(adjacent(c5, v, (v + 1) % 5));
  const auto m = cyclic_graph(4, {2});
  CHECK(m.edges() == std::set<Edge>{{0, 2}, {1, 3}});
  const auto c13 = cyclic_graph(13, {1, 5});
  CHECK_FALSE(oracle::has_clique(c13, 3));
  CHECK(oracle::alpha(c13, 3) == 4);
  CHECK_THROWS_AS(cyclic_graph(4, {3}), invalid_input);
}

TEST_CASE("search_small_alpha examples") {
  const auto five = search_small_alpha(5, 3, 2, 2000, 1);
  REQUIRE(five.found);
  CHECK(oracle::alpha(five.graph, 3) <= 2);
  CHECK_FALSE(oracle::has_clique(five.graph, 3));
  const auto thirteen = search_small_alpha(13, 3, 4, 2000, 1);
  REQUIRE(thirteen.found);
  CHECK(oracle::alpha(thirteen.graph, 3) == thirteen.alpha);
  CHECK(thirteen.alpha <= 4);
  CHECK_FALSE(oracle::has_clique(thirteen.graph, 3));
  CHECK_FALSE(search_small_alpha(3, 3, 1, 2000, 1).found);
}

TEST_CASE("embed_search examples") {
  const auto pet = petersen_graph();
  const auto one = embed_search(Hypergraph(2, 1), pet);
  REQUIRE(one.status == EmbedResult::Status::found);
  CHECK(one.mapping == std::vector<Vertex>{0});

  const auto c5 = cycle(5);
  const auto res = embed_search(c5, pet);
  REQUIRE(res.status == EmbedResult::Status::found);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) CHECK(adjacent(pet, res.mapping[u], res.mapping[v]) == adjacent(c5, u, v));

  CHECK(embed_search(cyclic_graph(3, {1}), pet).status == EmbedResult::Status::not_found);
  CHECK(embed_search(cyclic_graph(3, {1}), cycle(7), 1).status == EmbedResult::Status::exhausted);
}

TEST_CASE("reducts") {
  const auto h = random_maximal_free(12, 3, 4, 3);
  const Vertex anchor[] = {5};
  const auto red = hyper_to_graph(h, anchor);
  CHECK(red.graph.vertex_count() == 11);
  for (Vertex x = 0; x < 11; ++x) {
    CHECK(red.provenance[x] != 5);
    for (Vertex y = x + 1; y < 11; ++y) {
      const Vertex e[] = {red.provenance[x], red.provenance[y], 5};
      CHECK(adjacent(red.graph, x, y) == h.has_edge(e));
    }
  }
  const Vertex wrong[] = {1, 2};
  CHECK_THROWS_AS(hyper_to_graph(h, wrong), invalid_input);

  const auto t = Tournament::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto bip = tournament_to_bipartite(t, 0);
  CHECK(bip.graph.left_count() == 1);
  CHECK(bip.graph.right_count() == 1);
  CHECK(bip.left_provenance == std::vector<Vertex>{1});
  CHECK(bip.right_provenance == std::vector<Vertex>{2});
  const Vertex pq[] = {0, bip.graph.right_vertex(0)};
  CHECK(bip.graph.graph().has_edge(pq) == t.beats(1, 2));

  const auto f = Feq2Structure::from_classes(4, {{{0, 2}, {1, 3}}});
  const auto fb = feq_to_bipartite(f, 0);
  CHECK(fb.graph.left_count() == 3);
  CHECK(fb.graph.right_count() == 1);
  for (Vertex p = 0; p < 3; ++p) {
    const Vertex e[] = {p, fb.graph.right_vertex(0)};
    CHECK(fb.graph.graph().has_edge(e) == f.equivalent(0, 0, fb.left_provenance[p]));
  }
}

TEST_CASE("extension_probe") {
  const auto c5 = cycle(5);
  CHECK(extension_probe(c5, {}, {}) == Vertex{0});
  const Vertex u[] = {1};
  CHECK_THROWS_AS(extension_probe(c5, u, u), invalid_input);

  const auto g = random_maximal_free(60, 2, 5, 17);
  std::mt19937_64 rng(2);
  int found = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vertex> pool(60);
    for (Vertex v = 0; v < 60; ++v) pool[v] = v;
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<Vertex> a{pool[0], pool[1]}, b{pool[2], pool[3]};
    const auto w = extension_probe(g, a, b);
    if (!w) continue;
    ++found;
    CHECK(std::find(pool.begin(), pool.begin() + 4, *w) == pool.begin() + 4);
    for (Vertex x : a) CHECK(adjacent(g, x, *w));
    for (Vertex x : b) CHECK_FALSE(adjacent(g, x, *w));
  }
  CHECK(found > 0);
}

TEST_CASE("structure json round trip and rejection") {
  const auto g = random_maximal_free(15, 3, 4, 9);
  CHECK(hypergraph_from_json(to_json(g)) == g);
  auto bad = to_json(cycle(5));
  bad["edges"][0] = nlohmann::json::array({1, 0});
  CHECK_THROWS_AS(hypergraph_from_json(bad), schema_error);
  const auto t = random_tournament(6, 3);
  CHECK(tournament_from_json(to_json(t)).arcs() == t.arcs());
  CHECK(json_digest(to_json(g)) == json_digest(to_json(g)));
  CHECK(json_digest(to_json(g)) != json_digest(to_json(cycle(5))));
}

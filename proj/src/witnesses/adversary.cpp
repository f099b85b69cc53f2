#include "klab/witnesses/adversary.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "klab/coloring/coloring.hpp"
#include "klab/error.hpp"
#include "klab/logic/evaluate.hpp"
#include "klab/structures/cliques.hpp"

namespace klab {
namespace {

bool distinct_entries(const Tuple& t) {
  Tuple sorted = t;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

struct Setup {
  std::vector<Vertex> V;  // sorted entries of the distinct-entry tuples
  WeightedHypergraph weights{0, 1};
  std::size_t m = 0;
};

Setup build_weights(const std::vector<Tuple>& tuples, int r) {
  Setup s;
  std::set<Vertex> entries;
  for (const auto& t : tuples) {
    if (distinct_entries(t)) {
      entries.insert(t.begin(), t.end());
      ++s.m;
    }
  }
  s.V.assign(entries.begin(), entries.end());
  s.weights = WeightedHypergraph(s.V.size(), r - 1);
  for (const auto& t : tuples) {
    if (!distinct_entries(t)) continue;
    Edge local;
    for (Vertex v : t) local.push_back(static_cast<Vertex>(std::lower_bound(s.V.begin(), s.V.end(), v) - s.V.begin()));
    s.weights.add_weight(std::move(local), Rational(1));
  }
  return s;
}

// Every (r-1)-subset of V receiving pairwise distinct colours, in ambient vertex names.
std::vector<Edge> split_sets(const std::vector<Vertex>& V, const Coloring& chi, int r) {
  std::vector<Edge> out;
  const std::size_t width = static_cast<std::size_t>(r - 1);
  if (V.size() < width) return out;
  std::vector<std::size_t> idx(width);
  for (std::size_t i = 0; i < width; ++i) idx[i] = i;
  while (true) {
    unsigned used = 0;
    bool rainbow = true;
    for (std::size_t i : idx) {
      const unsigned bit = 1U << chi[i];
      if (used & bit) {
        rainbow = false;
        break;
      }
      used |= bit;
    }
    if (rainbow) {
      Edge e;
      for (std::size_t i : idx) e.push_back(V[i]);
      out.push_back(std::move(e));
    }
    std::size_t pos = width;
    while (pos > 0 && idx[pos - 1] == V.size() - width + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < width; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<Certification> check(const std::vector<Tuple>& tuples, const Hypergraph& ambient, std::size_t s,
                                 const std::vector<Vertex>& V, const Coloring& chi, Vertex b, const Setup& setup,
                                 std::size_t* violated_out) {
  const int r = ambient.arity();
  const Rational eps = epsilon_r(r);
  const Rational w = weight_of(setup.weights, chi);
  const std::size_t vertex_defects = V == setup.V ? 0 : 1;

  std::size_t cliques = 1;
  std::size_t violated = 0;
  auto extension = add_vertex_with_links(ambient, split_sets(V, chi, r), s);
  if (auto* h = std::get_if<Hypergraph>(&extension)) {
    cliques = 0;
    const Formula phi = hyperedge_avoidance_formula(r);
    const Vertex params[1] = {b};
    if (b != ambient.vertex_count()) cliques = 1;
    for (const auto& t : tuples) {
      if (!evaluate(*h, phi, Assignment{t, params})) ++violated;
    }
  }
  if (violated_out) *violated_out = violated;
  const Rational n = make_rational(static_cast<std::int64_t>(std::max<std::size_t>(tuples.size(), 1)));
  return {
      certify_zero("vertex_set_defects", vertex_defects),
      certify("w(chi) >= epsilon_r * m", w, ">=", eps * make_rational(static_cast<std::int64_t>(setup.m))),
      certify_zero("K_s_in_extension", cliques),
      certify("violated fraction >= epsilon_r", make_rational(static_cast<std::int64_t>(violated)) / n, ">=", eps),
  };
}

}  // namespace

Rational epsilon_r(int r) {
  if (r < 2) throw invalid_input("epsilon_r needs r >= 2");
  return factorial(static_cast<unsigned>(r - 1)) / power(Rational(r - 1), static_cast<unsigned>(r - 1));
}

std::vector<Tuple> random_tuples(const Hypergraph& ambient, std::size_t count, std::uint64_t seed) {
  if (ambient.vertex_count() == 0) throw invalid_input("cannot draw tuples from an empty ambient");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(ambient.vertex_count() - 1));
  std::vector<Tuple> out(count, Tuple(static_cast<std::size_t>(ambient.arity() - 1)));
  for (auto& t : out) {
    for (auto& v : t) v = pick(rng);
  }
  return out;
}

WitnessReport adversary_witness(const std::vector<Tuple>& tuples, const Hypergraph& ambient, std::size_t s) {
  const int r = ambient.arity();
  if (r < 3) throw invalid_input("the adversary construction needs r >= 3");
  if (tuples.empty()) throw invalid_input("no tuples to defeat");
  for (const auto& t : tuples) {
    if (t.size() != static_cast<std::size_t>(r - 1)) throw invalid_input("tuples must have r-1 entries");
    for (Vertex v : t) {
      if (v >= ambient.vertex_count()) throw invalid_input("tuple entry outside the ambient");
    }
  }
  if (!is_free(ambient, s)) throw invalid_input("ambient contains K^r_" + std::to_string(s));

  WitnessReport report;
  report.theorem = "dfsnotfim-adversary";
  const Setup setup = build_weights(tuples, r);
  const Coloring chi = greedy_coloring(setup.weights);
  const auto sigma = split_sets(setup.V, chi, r);
  const Vertex b = static_cast<Vertex>(ambient.vertex_count());
  report.log.push_back(std::to_string(setup.m) + " of " + std::to_string(tuples.size()) +
                       " tuples have distinct entries, spanning " + std::to_string(setup.V.size()) + " vertices");
  report.log.push_back("b joined to " + std::to_string(sigma.size()) + " split (r-1)-sets");

  std::size_t violated = 0;
  report.certified = check(tuples, ambient, s, setup.V, chi, b, setup, &violated);
  if (!report.certified[2].holds) throw error("extension by b created a clique; this contradicts the colouring argument");
  report.witness = {
      {"r", r},
      {"s", s},
      {"tuples", tuples},
      {"m", setup.m},
      {"V", setup.V},
      {"coloring", chi},
      {"b", b},
      {"sigma_size", sigma.size()},
      {"violated", violated},
      {"epsilon_r", rational_to_json(epsilon_r(r))},
      {"fraction", rational_to_json(make_rational(static_cast<std::int64_t>(violated),
                                                  static_cast<std::int64_t>(tuples.size())))},
  };
  return report;
}

std::vector<Certification> recheck_adversary(const nlohmann::json& witness, const Hypergraph& ambient) {
  const int r = ambient.arity();
  const auto tuples = witness.at("tuples").get<std::vector<Tuple>>();
  for (const auto& t : tuples) {
    if (t.size() != static_cast<std::size_t>(r - 1)) throw schema_error("tuple of the wrong length");
    for (Vertex v : t) {
      if (v >= ambient.vertex_count()) throw schema_error("tuple entry outside the ambient");
    }
  }
  const auto V = witness.at("V").get<std::vector<Vertex>>();
  const auto chi = witness.at("coloring").get<Coloring>();
  const Setup setup = build_weights(tuples, r);
  if (chi.size() != V.size() || V != setup.V) return {certify_zero("vertex_set_defects", 1)};
  for (int c : chi) {
    if (c < 1 || c > r - 1) throw schema_error("colour outside 1..r-1");
  }
  return check(tuples, ambient, witness.at("s").get<std::size_t>(), V, chi, witness.at("b").get<Vertex>(), setup,
               nullptr);
}

}  // namespace klab

#include "klab/witnesses/fam.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "klab/error.hpp"
#include "klab/logic/analyze.hpp"
#include "klab/logic/evaluate.hpp"
#include "klab/logic/parser.hpp"
#include "klab/measures/approximation.hpp"
#include "klab/structures/cliques.hpp"

namespace klab {
namespace {

struct Choice {
  PhiPartition target;  // phi or !phi
  bool negated = false;
  DisjunctProfile profile;
};

Choice choose_disjunct(const PhiPartition& phi) {
  Choice c{phi, false, {}};
  PhiAnalysis analysis = analyze_phi(phi);
  if (analysis.t_star.empty()) {
    c.target = PhiPartition{Formula::negation(phi.formula), phi.object_arity, phi.param_arity};
    c.negated = true;
    analysis = analyze_phi(c.target);
    if (analysis.t_star.empty()) throw fragment_error("neither phi nor its negation has a disjunct without E(x,y) and x = y");
  }
  const auto key = [&](std::size_t t) {
    const auto& p = analysis.profiles[t];
    return std::make_tuple(p.k(), p.l(), t);
  };
  const std::size_t best = *std::min_element(analysis.t_star.begin(), analysis.t_star.end(),
                                             [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  c.profile = analysis.profiles[best];
  return c;
}

std::size_t embedding_defects(const Hypergraph& g, const Hypergraph& host, const std::vector<Vertex>& mapping) {
  std::size_t defects = 0;
  if (mapping.size() != g.vertex_count()) return 1 + g.vertex_count();
  std::set<Vertex> seen;
  for (Vertex v : mapping) {
    if (v >= host.vertex_count() || !seen.insert(v).second) ++defects;
  }
  if (defects > 0) return defects;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      const Vertex pattern[2] = {u, v};
      const Vertex image[2] = {mapping[u], mapping[v]};
      if (g.has_edge(pattern) != host.has_edge(image)) ++defects;
    }
  }
  return defects;
}

nlohmann::json profile_json(const DisjunctProfile& p) {
  return {{"A", p.A}, {"B", p.B}, {"C", p.C}, {"D", p.D}, {"psi", to_string(to_formula(p.psi))}};
}

struct Measured {
  ApproxReport approx;
  std::size_t max_violations = 0;
  Tuple argmax_violations;
  std::size_t psi_true_count = 0;
};

Measured measure(const Choice& c, const Hypergraph& ambient, const std::vector<Vertex>& mapping,
                 const Rational& epsilon, const Rational& bound) {
  std::vector<Tuple> points;
  for (Vertex v : mapping) points.push_back({v});
  const ParamDomain domain = ParamDomain::all(ambient, static_cast<std::size_t>(c.target.param_arity));
  Measured m;
  m.approx = sup_error(TypeOracle::p_E(), ambient, points, c.target, domain, ScanMode::full(), epsilon);
  m.approx.certified_bound = bound;
  const std::size_t size = domain.size();
  for (std::size_t i = 0; i < size; ++i) {
    const Tuple b = domain.at(i);
    if (!evaluate(ambient, c.profile.psi, Assignment{{}, b})) continue;
    ++m.psi_true_count;
    const std::size_t z = points.size() - satisfying_count(ambient, points, c.target.formula, b);
    if (m.psi_true_count == 1 || z > m.max_violations) {
      m.max_violations = z;
      m.argmax_violations = b;
    }
  }
  return m;
}

std::vector<Certification> certifications(std::size_t n, const Rational& epsilon, std::size_t k, std::size_t l,
                                          std::size_t alpha, std::size_t defects, const Measured& m) {
  const Rational N = make_rational(static_cast<std::int64_t>(n));
  const Rational K = make_rational(static_cast<std::int64_t>(k));
  const Rational L = make_rational(static_cast<std::int64_t>(l));
  const Rational A = make_rational(static_cast<std::int64_t>(alpha));
  const Rational bound = L + K * A;
  return {
      certify("n*epsilon > 2*l", N * epsilon, ">", 2 * L),
      certify("2*k*alpha_s(G) < epsilon*n", 2 * K * A, "<", epsilon * N),
      certify_zero("embedding_defects", defects),
      certify("sup_error < epsilon", m.approx.sup_error, "<", epsilon),
      certify("sup_error <= (l + k*alpha_s(G))/n", m.approx.sup_error, "<=", bound / N),
      certify("max |Z| <= l + k*alpha_s(G)", make_rational(static_cast<std::int64_t>(m.max_violations)), "<=", bound),
  };
}

}  // namespace

WitnessReport fam_witness(const PhiPartition& phi, const Rational& epsilon, const Hypergraph& ambient,
                          const Hypergraph& g, std::size_t s, std::uint64_t budget) {
  if (ambient.arity() != 2 || g.arity() != 2) throw invalid_input("fam witness works on graphs");
  if (epsilon <= 0) throw invalid_input("epsilon must be positive");
  if (phi.object_arity != 1) throw invalid_input("fam witness needs exactly one object variable");
  if (!is_free(ambient, s)) throw invalid_input("ambient graph contains K_" + std::to_string(s));

  WitnessReport report;
  report.theorem = "famnotfim";
  const Choice c = choose_disjunct(phi);
  if (c.negated) report.log.push_back("no disjunct of phi lies in pE unconditionally; running on !phi");
  const std::size_t k = c.profile.k(), l = c.profile.l(), n = g.vertex_count();
  const Rational N = make_rational(static_cast<std::int64_t>(n));
  if (!(N * epsilon > 2 * make_rational(static_cast<std::int64_t>(l)))) {
    throw precondition_failed("n*epsilon > 2*l", "n*epsilon = " + to_string(N * epsilon) + " is not above 2l = " +
                                                     std::to_string(2 * l));
  }
  const AlphaResult alpha = alpha_s(g, s, budget);
  if (alpha.exhausted) {
    throw precondition_failed("2*k*alpha_s(G) < epsilon*n", "alpha_s(G) search budget exhausted at lower bound " +
                                                                std::to_string(alpha.value));
  }
  const Rational lhs = 2 * make_rational(static_cast<std::int64_t>(k * alpha.value));
  if (!(lhs < epsilon * N)) {
    throw precondition_failed("2*k*alpha_s(G) < epsilon*n", "2*k*alpha_s(G) = " + to_string(lhs) +
                                                                " is not below epsilon*n = " + to_string(epsilon * N));
  }
  report.log.push_back("k = " + std::to_string(k) + ", l = " + std::to_string(l) + ", alpha_" + std::to_string(s) +
                       "(G) = " + std::to_string(alpha.value));

  const EmbedResult embedding = embed_search(g, ambient, budget);
  if (embedding.status != EmbedResult::Status::found) {
    const bool exhausted = embedding.status == EmbedResult::Status::exhausted;
    throw embedding_not_found(exhausted, exhausted ? "embedding search budget exhausted"
                                                   : "G has no induced copy in the ambient graph");
  }
  report.log.push_back("induced embedding found after " + std::to_string(embedding.nodes) + " search nodes");

  const Rational bound = (make_rational(static_cast<std::int64_t>(l + k * alpha.value))) / N;
  const Measured m = measure(c, ambient, embedding.mapping, epsilon, bound);
  report.log.push_back("scanned " + std::to_string(m.approx.samples_scanned) + " parameter tuples; psi true on " +
                       std::to_string(m.psi_true_count));

  report.witness = {
      {"phi", to_string(phi.formula)},
      {"object_arity", phi.object_arity},
      {"param_arity", phi.param_arity},
      {"negated", c.negated},
      {"analyzed_phi", to_string(c.target.formula)},
      {"t_star", profile_json(c.profile)},
      {"k", k},
      {"l", l},
      {"s", s},
      {"n", n},
      {"epsilon", rational_to_json(epsilon)},
      {"alpha", alpha.value},
      {"alpha_witness", alpha.witness},
      {"embedding", embedding.mapping},
      {"approximation", m.approx.to_json()},
      {"max_violations", m.max_violations},
      {"argmax_violations", m.argmax_violations},
  };
  report.certified = certifications(n, epsilon, k, l, alpha.value, 0, m);
  return report;
}

std::vector<Certification> recheck_fam(const nlohmann::json& witness, const Hypergraph& ambient,
                                       const Hypergraph& g) {
  const PhiPartition phi{parse_formula(witness.at("phi").get<std::string>()), witness.at("object_arity").get<int>(),
                         witness.at("param_arity").get<int>()};
  const Rational epsilon = rational_from_json(witness.at("epsilon"));
  const std::size_t s = witness.at("s").get<std::size_t>();
  const auto mapping = witness.at("embedding").get<std::vector<Vertex>>();
  const Choice c = choose_disjunct(phi);
  const AlphaResult alpha = alpha_s(g, s);
  if (alpha.exhausted) throw error("alpha_s(G) could not be recomputed within the search budget");
  const std::size_t defects = embedding_defects(g, ambient, mapping);
  const std::size_t n = g.vertex_count();
  const Rational bound = make_rational(static_cast<std::int64_t>(c.profile.l() + c.profile.k() * alpha.value)) /
                         make_rational(static_cast<std::int64_t>(std::max<std::size_t>(n, 1)));
  Measured m;
  if (defects == 0 && n > 0) m = measure(c, ambient, mapping, epsilon, bound);
  return certifications(n, epsilon, c.profile.k(), c.profile.l(), alpha.value, defects, m);
}

}  // namespace klab

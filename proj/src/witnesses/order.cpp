#include "klab/witnesses/order.hpp"

#include <string>

#include "klab/error.hpp"
#include "klab/structures/cliques.hpp"

namespace klab {
namespace {

std::vector<Certification> check(const Hypergraph& ambient, const Hypergraph& extended, std::size_t s,
                                 const std::vector<Vertex>& a, const nlohmann::json& b) {
  std::size_t alternation = 0, freshness = 0;
  const std::size_t n = ambient.vertex_count();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != n + i) ++freshness;
  }
  if (!a.empty()) {
    if (b.is_null()) return {certify_zero("alternation_violations", a.size())};
    const Vertex bv = b.get<Vertex>();
    if (bv != n + a.size() || extended.vertex_count() != n + a.size() + 1) ++freshness;
    for (std::size_t i = 0; i < a.size() && a[i] < extended.vertex_count(); ++i) {
      const bool even = (i + 1) % 2 == 0;
      const Vertex pair[2] = {a[i], bv};
      if (extended.has_edge(pair) != even) ++alternation;
      // a_i sees nothing but possibly b
      if (extended.degree(a[i]) != (extended.has_edge(pair) ? 1U : 0U)) ++freshness;
    }
  }
  return {
      certify_zero("alternation_violations", alternation),
      certify_zero("fresh_vertex_defects", freshness),
      certify_zero("K_s_in_extension", is_free(extended, s) ? 0 : 1),
  };
}

}  // namespace

WitnessReport order_witness(const Hypergraph& ambient, std::size_t s, std::size_t q) {
  if (ambient.arity() != 2) throw invalid_input("order witness works on graphs");
  if (!is_free(ambient, s)) throw invalid_input("ambient graph contains K_" + std::to_string(s));
  WitnessReport report;
  report.theorem = "order";
  Hypergraph extended = ambient;
  std::vector<Vertex> a;
  nlohmann::json b = nullptr;
  nlohmann::json added = nlohmann::json::array();
  if (q == 0) {
    report.log.push_back("q = 0: nothing to alternate, ambient left unchanged");
  } else {
    for (std::size_t i = 0; i < 2 * q; ++i) a.push_back(extended.add_vertex());
    std::vector<Edge> links;
    for (std::size_t i = 1; i < a.size(); i += 2) links.push_back({a[i]});
    auto result = add_vertex_with_links(extended, links, s);
    if (auto* violation = std::get_if<FreenessViolation>(&result)) {
      (void)violation;
      throw error("extension by b created a clique; the fresh vertices are not independent");
    }
    extended = std::get<Hypergraph>(std::move(result));
    b = extended.vertex_count() - 1;
    for (const auto& link : links) added.push_back({link.front(), b.get<Vertex>()});
    report.log.push_back("b = " + std::to_string(b.get<Vertex>()) + " joined to a_2, a_4, ..., a_" +
                         std::to_string(2 * q));
  }
  report.witness = {{"s", s}, {"q", q}, {"a", a}, {"b", b}, {"added_edges", added},
                    {"vertex_count", extended.vertex_count()}};
  report.certified = check(ambient, extended, s, a, b);
  return report;
}

Hypergraph order_extension(const nlohmann::json& witness, const Hypergraph& ambient) {
  Hypergraph extended = ambient;
  const auto count = witness.at("vertex_count").get<std::size_t>();
  if (count < ambient.vertex_count()) throw schema_error("order report shrinks the ambient graph");
  while (extended.vertex_count() < count) extended.add_vertex();
  for (const auto& e : witness.at("added_edges")) extended.insert_edge(e.get<Edge>());
  return extended;
}

std::vector<Certification> recheck_order(const nlohmann::json& witness, const Hypergraph& ambient) {
  const Hypergraph extended = order_extension(witness, ambient);
  return check(ambient, extended, witness.at("s").get<std::size_t>(), witness.at("a").get<std::vector<Vertex>>(),
               witness.at("b"));
}

}  // namespace klab

#include "klab/measures/type_oracle.hpp"

#include "klab/error.hpp"
#include "klab/logic/analyze.hpp"
#include "klab/logic/dnf.hpp"

namespace klab {

TypeOracle TypeOracle::p_E() { return TypeOracle(Kind::graph, "pE"); }
TypeOracle TypeOracle::p_R() { return TypeOracle(Kind::hypergraph, "pR"); }

TypeOracle::Decider TypeOracle::bind(const PhiPartition& phi, const Hypergraph& host) const {
  phi.validate();
  if (kind_ == Kind::graph) {
    if (host.arity() != 2) throw invalid_input("pE lives on graphs");
    const PhiAnalysis analysis = analyze_phi(phi);
    std::vector<Clause> residuals;
    for (std::size_t t : analysis.t_star) residuals.push_back(analysis.profiles[t].psi);
    return [&host, residuals](std::span<const Vertex> params) {
      const Assignment a{{}, params};
      for (const auto& psi : residuals) {
        if (evaluate(host, psi, a)) return true;
      }
      return false;
    };
  }
  const int r = host.arity();
  if (r < 3) throw invalid_input("pR lives on r-graphs with r >= 3");
  const Formula canonical = hyperedge_avoidance_formula(r);
  if (phi.object_arity == r - 1 && phi.param_arity == 1) {
    const Dnf d = to_dnf(phi.formula);
    if (d == to_dnf(canonical)) return [](std::span<const Vertex>) { return true; };
    if (d == to_dnf(Formula::negation(canonical))) return [](std::span<const Vertex>) { return false; };
  }
  throw fragment_error("pR only decides " + to_string(canonical) + " and its negation");
}

}  // namespace klab

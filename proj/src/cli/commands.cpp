#include "klab/cli/commands.hpp"

#include <numeric>
#include <sstream>

#include "klab/cli/specs.hpp"
#include "klab/coloring/coloring.hpp"
#include "klab/error.hpp"
#include "klab/logic/parser.hpp"
#include "klab/structures/cliques.hpp"
#include "klab/structures/io.hpp"
#include "klab/structures/search.hpp"
#include "klab/witnesses/adversary.hpp"
#include "klab/witnesses/fam.hpp"
#include "klab/witnesses/measure_checks.hpp"
#include "klab/witnesses/order.hpp"
#include "klab/witnesses/sat_probe.hpp"
#include "klab/witnesses/tp2.hpp"

namespace klab::cli {
namespace {

nlohmann::json input_entry(const ResolvedStructure& r) { return {{"spec", r.spec}, {"digest", r.digest}}; }

std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw invalid_input(std::string("missing required flag ") + flag);
  return *v;
}

Hypergraph load_hypergraph(const ResolvedStructure& r, const char* role) {
  if (r.structure.at("kind") != "hypergraph") throw invalid_input(std::string(role) + " must be a hypergraph");
  return hypergraph_from_json(r.structure);
}

Outcome finish(WitnessReport report, std::uint64_t seed) {
  report.seed = seed;
  return {report.to_json(), report.certified};
}

std::size_t count_maximality_defects(Hypergraph h, std::size_t s) {
  const int r = h.arity();
  const std::size_t n = h.vertex_count();
  if (n < static_cast<std::size_t>(r)) return 0;
  std::size_t defects = 0;
  std::vector<Vertex> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), Vertex{0});
  while (true) {
    if (!h.has_edge(idx)) {
      h.insert_edge(idx);
      if (!find_clique(h, s, idx)) ++defects;
      h.erase_edge(idx);
    }
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == n - idx.size() + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
  }
  return defects;
}

}  // namespace

bool Outcome::all_hold() const {
  for (const auto& c : certified) {
    if (!c.holds) return false;
  }
  return true;
}

std::vector<Certification> structure_certifications(const nlohmann::json& structure, const nlohmann::json& witness) {
  std::vector<Certification> certs;
  if (structure.at("kind") != "hypergraph" || witness.at("s").is_null()) return certs;
  const Hypergraph h = hypergraph_from_json(structure);
  const auto s = witness.at("s").get<std::size_t>();
  certs.push_back(certify_zero("K_s_in_structure", is_free(h, s) ? 0 : 1));
  if (witness.at("maximal").get<bool>()) {
    certs.push_back(certify_zero("maximality_defects", count_maximality_defects(h, s)));
  }
  if (!witness.at("alpha").is_null()) {
    const AlphaResult alpha = alpha_s(h, s);
    if (alpha.exhausted) throw error("alpha_s could not be recomputed within the search budget");
    certs.push_back(certify("alpha_s recomputed", make_rational(static_cast<std::int64_t>(alpha.value)), "==",
                            make_rational(witness.at("alpha").get<std::int64_t>())));
  }
  return certs;
}

Outcome run_gen(const RunConfig& cfg) {
  std::string spec = cfg.graph;
  if (spec.empty()) {
    spec = "gen:" + std::to_string(require(cfg.n, "--n")) + ":" + std::to_string(cfg.r.value_or(2)) + ":" +
           std::to_string(cfg.s.value_or(3)) + ":seed=" + std::to_string(cfg.seed);
  }
  const ResolvedStructure resolved = resolve_structure(spec);
  const std::string generator = spec.substr(0, spec.find(':'));
  WitnessReport report;
  report.theorem = "gen";
  report.inputs = {{"structure", input_entry(resolved)}};
  nlohmann::json witness = {{"generator", generator}, {"s", nullptr}, {"alpha", nullptr}, {"maximal", false}};
  if (generator == "gen") {
    witness["s"] = resolved.meta.at("s");
    witness["maximal"] = true;
  } else if (generator == "search") {
    witness["s"] = resolved.meta.at("s");
    witness["alpha"] = resolved.meta.at("alpha");
    witness["search"] = resolved.meta;
    report.log.push_back(resolved.meta.at("found").get<bool>() ? "search reached the target"
                                                               : "search did not reach the target");
  } else if (generator == "circulant" && cfg.s) {
    witness["s"] = *cfg.s;
    const AlphaResult alpha = alpha_s(hypergraph_from_json(resolved.structure), *cfg.s, cfg.budget);
    if (alpha.exhausted) throw error("alpha_s search budget exhausted");
    witness["alpha"] = alpha.value;
  }
  report.witness = witness;
  report.certified = structure_certifications(resolved.structure, witness);
  report.seed = cfg.seed;
  nlohmann::json doc = report.to_json();
  for (const auto& [key, value] : resolved.structure.items()) doc[key] = value;
  return {doc, report.certified};
}

std::vector<Certification> recheck_coloring(const nlohmann::json& witness, const nlohmann::json& weights) {
  const WeightedHypergraph h = weighted_hypergraph_from_json(weights);
  const auto chi = witness.at("coloring").get<Coloring>();
  const Rational greedy = weight_of(h, chi);
  const Rational guarantee = guarantee_value(h);
  std::vector<Certification> certs{certify("w(greedy) >= (r!/r^r) w(V)", greedy, ">=", guarantee)};
  if (!witness.at("brute").is_null()) {
    const BruteForceResult best = brute_best(h);
    certs.push_back(certify("max_chi w(chi) >= w(greedy)", best.best_value, ">=", greedy));
    certs.push_back(certify("mean_chi w(chi) == (r!/r^r) w(V)", best.average, "==", guarantee));
  }
  return certs;
}

Outcome run_color(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw invalid_input("color needs exactly one --input weighted hypergraph file");
  const nlohmann::json weights = read_json_file(cfg.inputs.front());
  const WeightedHypergraph h = weighted_hypergraph_from_json(weights);
  const GreedyTrace trace = greedy_coloring_traced(h);
  WitnessReport report;
  report.theorem = "coloring";
  report.inputs = {{"weights", {{"spec", cfg.inputs.front()}, {"digest", json_digest(weights)}}}};
  nlohmann::json expectations = nlohmann::json::array();
  for (const auto& e : trace.expectations) expectations.push_back(rational_to_json(e));
  report.witness = {{"n", h.vertex_count()},
                    {"r", h.arity()},
                    {"coloring", trace.coloring},
                    {"weight", rational_to_json(weight_of(h, trace.coloring))},
                    {"total_weight", rational_to_json(h.total_weight())},
                    {"guarantee", rational_to_json(guarantee_value(h))},
                    {"expectations", expectations},
                    {"brute", nullptr}};
  if (cfg.brute) {
    const BruteForceResult best = brute_best(h);
    report.witness["brute"] = {{"best", best.best},
                               {"best_value", rational_to_json(best.best_value)},
                               {"average", rational_to_json(best.average)}};
  }
  report.certified = recheck_coloring(report.witness, weights);
  return finish(std::move(report), cfg.seed);
}

Outcome run_fam(const RunConfig& cfg) {
  if (cfg.phi.empty() || cfg.epsilon.empty() || cfg.graph.empty() || cfg.ambient.empty()) {
    throw invalid_input("fam needs --phi, --epsilon, --graph and --ambient");
  }
  const PhiPartition phi = PhiPartition::infer(parse_formula(cfg.phi));
  const Rational epsilon = parse_rational(cfg.epsilon);
  const ResolvedStructure ambient = resolve_structure(cfg.ambient);
  const ResolvedStructure graph = resolve_structure(cfg.graph);
  WitnessReport report = fam_witness(phi, epsilon, load_hypergraph(ambient, "--ambient"),
                                     load_hypergraph(graph, "--graph"), cfg.s.value_or(3), cfg.budget);
  report.inputs = {{"ambient", input_entry(ambient)}, {"graph", input_entry(graph)}};
  return finish(std::move(report), cfg.seed);
}

Outcome run_adversary(const RunConfig& cfg) {
  if (cfg.ambient.empty()) throw invalid_input("adversary needs --ambient");
  const ResolvedStructure ambient = resolve_structure(cfg.ambient);
  const Hypergraph h = load_hypergraph(ambient, "--ambient");
  const std::size_t r = cfg.r.value_or(static_cast<std::size_t>(h.arity()));
  if (r != static_cast<std::size_t>(h.arity())) throw invalid_input("--r does not match the ambient arity");
  const auto tuples = random_tuples(h, require(cfg.n, "--n"), cfg.seed);
  WitnessReport report = adversary_witness(tuples, h, require(cfg.s, "--s"));
  report.inputs = {{"ambient", input_entry(ambient)}};
  return finish(std::move(report), cfg.seed);
}

Outcome run_satprobe(const RunConfig& cfg) {
  if (cfg.ambient.empty()) throw invalid_input("satprobe needs --ambient");
  const ResolvedStructure ambient = resolve_structure(cfg.ambient);
  const Hypergraph h = load_hypergraph(ambient, "--ambient");
  const std::size_t m = cfg.m.value_or(h.vertex_count());
  if (m > h.vertex_count()) throw invalid_input("--m exceeds the ambient size");
  std::vector<Vertex> M(m);
  std::iota(M.begin(), M.end(), Vertex{0});
  const auto params = random_parameter_sets(h, M, cfg.k.value_or(4), cfg.trials.value_or(1), cfg.seed);
  WitnessReport report = sat_probe(h, M, params);
  report.inputs = {{"ambient", input_entry(ambient)}};
  return finish(std::move(report), cfg.seed);
}

Outcome run_tp2(const RunConfig& cfg) {
  const std::size_t k = require(cfg.k, "--k");
  const std::string spec = cfg.inputs.empty() ? "tp2grid:" + std::to_string(k) : cfg.inputs.front();
  const ResolvedStructure structure = resolve_structure(spec);
  if (structure.structure.at("kind") != "feq2") throw invalid_input("tp2 needs a feq2 structure");
  std::vector<Path> paths;
  if (cfg.paths == "all") {
    paths = all_paths(k);
  } else {
    std::size_t count = 0;
    try {
      count = std::stoull(cfg.paths);
    } catch (const std::exception&) {
      throw invalid_input("--paths takes 'all' or a sample size");
    }
    paths = sample_paths(k, count, cfg.seed);
  }
  WitnessReport report = tp2_witness(feq2_from_json(structure.structure), k, paths);
  report.inputs = {{"structure", input_entry(structure)}};
  return finish(std::move(report), cfg.seed);
}

Outcome run_order(const RunConfig& cfg) {
  if (cfg.ambient.empty()) throw invalid_input("order needs --ambient");
  const ResolvedStructure ambient = resolve_structure(cfg.ambient);
  WitnessReport report = order_witness(load_hypergraph(ambient, "--ambient"), cfg.s.value_or(3),
                                       require(cfg.q, "--q"));
  report.inputs = {{"ambient", input_entry(ambient)}};
  return finish(std::move(report), cfg.seed);
}

Outcome run_check_measures(const RunConfig& cfg) {
  return finish(measure_self_check(cfg.seed, cfg.trials.value_or(100)), cfg.seed);
}

std::string certifications_csv(const std::vector<Certification>& certs) {
  std::ostringstream out;
  out << "name,relation,lhs,rhs,holds\n";
  for (const auto& c : certs) {
    out << '"' << c.name << "\"," << c.relation << ',' << to_string(c.lhs) << ',' << to_string(c.rhs) << ','
        << (c.holds ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace klab::cli

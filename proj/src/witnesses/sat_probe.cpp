#include "klab/witnesses/sat_probe.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "klab/error.hpp"
#include "klab/logic/evaluate.hpp"

namespace klab {
namespace {

struct Checked {
  std::size_t witness_violations = 0;
  std::size_t missed = 0;
};

Checked check(const Hypergraph& ambient, std::span<const Vertex> M, const nlohmann::json& trials) {
  Checked c;
  const Formula phi = hyperedge_avoidance_formula(ambient.arity());
  for (const auto& trial : trials) {
    const auto params = trial.at("params").get<std::vector<Vertex>>();
    for (Vertex v : params) {
      if (v >= ambient.vertex_count()) throw schema_error("parameter outside the ambient");
    }
    if (trial.at("witness").is_null()) {
      if (find_avoiding_tuple(ambient, M, params)) ++c.missed;
      continue;
    }
    const auto a = trial.at("witness").get<Tuple>();
    const bool in_m = a.size() == static_cast<std::size_t>(ambient.arity() - 1) &&
                      std::all_of(a.begin(), a.end(), [&](Vertex v) {
                        return std::find(M.begin(), M.end(), v) != M.end();
                      });
    if (!in_m) {
      ++c.witness_violations;
      continue;
    }
    for (Vertex b : params) {
      const Vertex p[1] = {b};
      if (!evaluate(ambient, phi, Assignment{a, p})) ++c.witness_violations;
    }
  }
  return c;
}

std::vector<Certification> certifications(const Checked& c) {
  return {certify_zero("witness_violations", c.witness_violations),
          certify_zero("missed_witnesses", c.missed)};
}

}  // namespace

std::optional<Tuple> find_avoiding_tuple(const Hypergraph& ambient, std::span<const Vertex> M,
                                         std::span<const Vertex> params) {
  std::vector<Vertex> pool(M.begin(), M.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const std::size_t width = static_cast<std::size_t>(ambient.arity() - 1);
  if (pool.size() < width) return std::nullopt;
  std::vector<std::size_t> idx(width);
  for (std::size_t i = 0; i < width; ++i) idx[i] = i;
  Tuple edge(width + 1);
  while (true) {
    bool ok = true;
    for (Vertex b : params) {
      for (std::size_t i = 0; i < width; ++i) edge[i] = pool[idx[i]];
      edge[width] = b;
      if (ambient.has_edge(edge)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Tuple a(width);
      for (std::size_t i = 0; i < width; ++i) a[i] = pool[idx[i]];
      return a;
    }
    std::size_t pos = width;
    while (pos > 0 && idx[pos - 1] == pool.size() - width + pos - 1) --pos;
    if (pos == 0) return std::nullopt;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < width; ++i) idx[i] = idx[i - 1] + 1;
  }
}

std::vector<std::vector<Vertex>> random_parameter_sets(const Hypergraph& ambient, std::span<const Vertex> M,
                                                       std::size_t per_trial, std::size_t trials,
                                                       std::uint64_t seed) {
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < ambient.vertex_count(); ++v) {
    if (std::find(M.begin(), M.end(), v) == M.end()) outside.push_back(v);
  }
  if (outside.empty()) {
    for (Vertex v = 0; v < ambient.vertex_count(); ++v) outside.push_back(v);
  }
  if (per_trial > outside.size()) throw invalid_input("not enough vertices for the requested parameter count");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t t = 0; t < trials; ++t) {
    std::shuffle(outside.begin(), outside.end(), rng);
    std::vector<Vertex> params(outside.begin(), outside.begin() + static_cast<std::ptrdiff_t>(per_trial));
    std::sort(params.begin(), params.end());
    out.push_back(std::move(params));
  }
  return out;
}

WitnessReport sat_probe(const Hypergraph& ambient, std::vector<Vertex> M,
                        const std::vector<std::vector<Vertex>>& parameter_sets) {
  if (ambient.arity() < 2) throw invalid_input("satisfiability probe needs arity >= 2");
  std::sort(M.begin(), M.end());
  M.erase(std::unique(M.begin(), M.end()), M.end());
  for (Vertex v : M) {
    if (v >= ambient.vertex_count()) throw invalid_input("M leaves the ambient");
  }
  WitnessReport report;
  report.theorem = "dfsnotfim-sat";
  nlohmann::json trials = nlohmann::json::array();
  std::size_t found = 0;
  for (const auto& params : parameter_sets) {
    for (Vertex v : params) {
      if (v >= ambient.vertex_count()) throw invalid_input("parameter outside the ambient");
    }
    const auto a = find_avoiding_tuple(ambient, M, params);
    if (a) ++found;
    trials.push_back({{"params", params}, {"witness", a ? nlohmann::json(*a) : nlohmann::json(nullptr)}});
  }
  const std::size_t total = parameter_sets.size();
  report.log.push_back("witness found in " + std::to_string(found) + " of " + std::to_string(total) + " trials");
  report.witness = {
      {"r", ambient.arity()},
      {"M", M},
      {"trials", trials},
      {"found", found},
      {"success_rate", total == 0 ? nlohmann::json(nullptr)
                                  : rational_to_json(make_rational(static_cast<std::int64_t>(found),
                                                                   static_cast<std::int64_t>(total)))},
  };
  report.certified = certifications(check(ambient, M, trials));
  return report;
}

std::vector<Certification> recheck_sat_probe(const nlohmann::json& witness, const Hypergraph& ambient) {
  const auto M = witness.at("M").get<std::vector<Vertex>>();
  for (Vertex v : M) {
    if (v >= ambient.vertex_count()) throw schema_error("M leaves the ambient");
  }
  return certifications(check(ambient, M, witness.at("trials")));
}

}  // namespace klab

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "klab/witnesses/report.hpp"

namespace klab::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string epsilon;
  std::string phi;
  std::string graph;
  std::string ambient;
  std::optional<std::size_t> n, r, s, k, q, m;
  std::uint64_t budget = 50'000'000;
  std::optional<std::size_t> trials;
  bool brute = false;
  std::string paths = "all";
};

/// A finished run: the JSON document to emit and the certifications it carries.
struct Outcome {
  nlohmann::json document;
  std::vector<Certification> certified;

  bool all_hold() const;
};

Outcome run_gen(const RunConfig& cfg);
Outcome run_color(const RunConfig& cfg);
Outcome run_fam(const RunConfig& cfg);
Outcome run_adversary(const RunConfig& cfg);
Outcome run_satprobe(const RunConfig& cfg);
Outcome run_tp2(const RunConfig& cfg);
Outcome run_order(const RunConfig& cfg);
Outcome run_check_measures(const RunConfig& cfg);

/// Certifications of a generated structure; shared by gen and verify.
std::vector<Certification> structure_certifications(const nlohmann::json& structure, const nlohmann::json& witness);

/// Certifications of a colouring report recomputed from its payload.
std::vector<Certification> recheck_coloring(const nlohmann::json& witness, const nlohmann::json& weights);

/// name,relation,lhs,rhs,holds table.
std::string certifications_csv(const std::vector<Certification>& certs);

}  // namespace klab::cli

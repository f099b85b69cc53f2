#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "klab/rational.hpp"

namespace klab {

/// lhs <relation> rhs, evaluated exactly.
struct Certification {
  std::string name;
  Rational lhs;
  std::string relation;  // one of "<", "<=", "==", ">=", ">"
  Rational rhs;
  bool holds = false;

  friend bool operator==(const Certification&, const Certification&) = default;
};

Certification certify(std::string name, const Rational& lhs, std::string relation, const Rational& rhs);
/// Boolean checks are recorded as "number of violations == 0".
Certification certify_zero(std::string name, std::size_t violations);

struct WitnessReport {
  std::string theorem;
  /// role -> {"spec": ..., "digest": ...}
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json witness = nlohmann::json::object();
  std::vector<Certification> certified;
  std::vector<std::string> log;
  std::optional<std::uint64_t> seed;

  bool all_hold() const;
  nlohmann::json to_json() const;
  static WitnessReport from_json(const nlohmann::json& j);
};

nlohmann::json to_json(const Certification& c);
Certification certification_from_json(const nlohmann::json& j);

}  // namespace klab

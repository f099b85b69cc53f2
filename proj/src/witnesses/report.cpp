#include "klab/witnesses/report.hpp"

#include "klab/error.hpp"

namespace klab {

Certification certify(std::string name, const Rational& lhs, std::string relation, const Rational& rhs) {
  bool holds = false;
  if (relation == "<") holds = lhs < rhs;
  else if (relation == "<=") holds = lhs <= rhs;
  else if (relation == "==") holds = lhs == rhs;
  else if (relation == ">=") holds = lhs >= rhs;
  else if (relation == ">") holds = lhs > rhs;
  else throw invalid_input("unknown relation " + relation);
  return {std::move(name), lhs, std::move(relation), rhs, holds};
}

Certification certify_zero(std::string name, std::size_t violations) {
  return certify(std::move(name), make_rational(static_cast<std::int64_t>(violations)), "==", Rational(0));
}

bool WitnessReport::all_hold() const {
  for (const auto& c : certified) {
    if (!c.holds) return false;
  }
  return true;
}

nlohmann::json to_json(const Certification& c) {
  return {{"name", c.name},
          {"lhs", rational_to_json(c.lhs)},
          {"relation", c.relation},
          {"rhs", rational_to_json(c.rhs)},
          {"holds", c.holds}};
}

Certification certification_from_json(const nlohmann::json& j) {
  try {
    Certification c;
    c.name = j.at("name").get<std::string>();
    c.lhs = rational_from_json(j.at("lhs"));
    c.relation = j.at("relation").get<std::string>();
    c.rhs = rational_from_json(j.at("rhs"));
    c.holds = j.at("holds").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw schema_error(std::string("certification entry: ") + e.what());
  }
}

nlohmann::json WitnessReport::to_json() const {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : certified) certs.push_back(klab::to_json(c));
  nlohmann::json j = {{"theorem", theorem},
                      {"inputs", inputs},
                      {"witness", witness},
                      {"certified", certs},
                      {"log", log}};
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  return j;
}

WitnessReport WitnessReport::from_json(const nlohmann::json& j) {
  try {
    WitnessReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.inputs = j.at("inputs");
    r.witness = j.at("witness");
    for (const auto& c : j.at("certified")) r.certified.push_back(certification_from_json(c));
    r.log = j.at("log").get<std::vector<std::string>>();
    if (j.contains("seed") && !j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    if (!r.inputs.is_object() || !r.witness.is_object()) throw schema_error("inputs and witness must be objects");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw schema_error(std::string("report JSON: ") + e.what());
  }
}

}  // namespace klab

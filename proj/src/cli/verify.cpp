#include "klab/cli/verify.hpp"

#include <map>

#include "klab/cli/commands.hpp"
#include "klab/cli/specs.hpp"
#include "klab/error.hpp"
#include "klab/structures/io.hpp"
#include "klab/witnesses/adversary.hpp"
#include "klab/witnesses/fam.hpp"
#include "klab/witnesses/measure_checks.hpp"
#include "klab/witnesses/order.hpp"
#include "klab/witnesses/sat_probe.hpp"
#include "klab/witnesses/tp2.hpp"

namespace klab::cli {
namespace {

std::map<std::string, std::string> parse_overrides(const std::vector<std::string>& inputs,
                                                   const nlohmann::json& roles) {
  std::map<std::string, std::string> out;
  for (const auto& in : inputs) {
    const auto eq = in.find('=');
    if (eq != std::string::npos && roles.contains(in.substr(0, eq))) {
      out[in.substr(0, eq)] = in.substr(eq + 1);
    } else if (roles.size() == 1) {
      out[roles.begin().key()] = in;
    } else {
      throw invalid_input("cannot tell which input '" + in + "' replaces; use role=path");
    }
  }
  return out;
}

std::vector<Certification> recompute(const WitnessReport& report, const nlohmann::json& doc,
                                     const std::map<std::string, nlohmann::json>& inputs) {
  const auto& w = report.witness;
  const auto graph = [&](const char* role) { return hypergraph_from_json(inputs.at(role)); };
  const std::string& t = report.theorem;
  if (t == "gen") return structure_certifications(structure_fields(doc), w);
  if (t == "coloring") return recheck_coloring(w, inputs.at("weights"));
  if (t == "famnotfim") return recheck_fam(w, graph("ambient"), graph("graph"));
  if (t == "dfsnotfim-adversary") return recheck_adversary(w, graph("ambient"));
  if (t == "dfsnotfim-sat") return recheck_sat_probe(w, graph("ambient"));
  if (t == "order") return recheck_order(w, graph("ambient"));
  if (t == "tp2") return recheck_tp2(w, feq2_from_json(inputs.at("structure")));
  if (t == "measures") {
    if (!report.seed) throw schema_error("measure report without a seed");
    return recheck_measures(w, *report.seed);
  }
  throw schema_error("unknown theorem tag '" + t + "'");
}

}  // namespace

int verify_report(const std::string& report_path, const std::vector<std::string>& inputs, std::ostream& out,
                  std::ostream& err) {
  WitnessReport report;
  nlohmann::json doc;
  std::map<std::string, nlohmann::json> structures;
  bool reproduced = true;
  try {
    doc = read_json_file(report_path);
    report = WitnessReport::from_json(doc);
    const auto overrides = parse_overrides(inputs, report.inputs);
    for (const auto& [role, entry] : report.inputs.items()) {
      const std::string recorded = entry.at("digest").get<std::string>();
      const auto it = overrides.find(role);
      const std::string source = it != overrides.end() ? it->second : entry.at("spec").get<std::string>();
      nlohmann::json data;
      std::string digest;
      if (role == "weights") {
        data = read_json_file(source);
        digest = json_digest(data);
      } else {
        const ResolvedStructure resolved = resolve_structure(source);
        data = resolved.structure;
        digest = resolved.digest;
      }
      if (digest != recorded) {
        err << "digest mismatch for input '" << role << "' (" << source << "): recorded " << recorded << ", got "
            << digest << "\n";
        reproduced = false;
      }
      structures[role] = std::move(data);
    }
    if (report.theorem == "gen" && json_digest(structure_fields(doc)) != report.inputs.at("structure").at("digest")) {
      err << "digest mismatch: the structure in the report differs from its recorded digest\n";
      reproduced = false;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "malformed report: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    err << e.what() << "\n";
    return 1;
  }

  std::vector<Certification> fresh;
  try {
    fresh = recompute(report, doc, structures);
  } catch (const nlohmann::json::exception& e) {
    err << "malformed witness payload: " << e.what() << "\n";
    return 1;
  } catch (const schema_error& e) {
    err << "malformed witness payload: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    err << "could not recompute certifications: " << e.what() << "\n";
    return 2;
  }

  if (fresh.size() != report.certified.size()) {
    err << "report lists " << report.certified.size() << " certifications, recomputation gives " << fresh.size()
        << "\n";
    reproduced = false;
  }
  bool all_hold = true;
  for (std::size_t i = 0; i < std::min(fresh.size(), report.certified.size()); ++i) {
    const auto& mine = fresh[i];
    const auto& theirs = report.certified[i];
    const bool same = mine == theirs;
    reproduced = reproduced && same;
    all_hold = all_hold && mine.holds;
    out << (same ? "ok       " : "MISMATCH ") << mine.name << ": " << to_string(mine.lhs) << " " << mine.relation
        << " " << to_string(mine.rhs) << (mine.holds ? "" : "  (fails)") << "\n";
    if (!same) {
      err << "certification '" << theirs.name << "' recorded as " << to_string(theirs.lhs) << " " << theirs.relation
          << " " << to_string(theirs.rhs) << " holds=" << (theirs.holds ? "true" : "false") << "\n";
    }
  }
  return reproduced && all_hold ? 0 : 2;
}

}  // namespace klab::cli

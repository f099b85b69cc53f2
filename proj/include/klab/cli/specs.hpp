#pragma once

#include <string>

#include <json.hpp>

namespace klab::cli {

// Structure specs accepted wherever a structure is expected:
//   gen:<n>:<r>:<s>:seed=<x>               random maximal K^r_s-free r-graph
//   circulant:<n>:<d1>,<d2>,...            circulant graph
//   search:<n>:<s>:<target>:seed=<x>[:budget=<b>]   best graph from search_small_alpha
//   petersen
//   tournament:<n>:seed=<x>
//   tp2grid:<k>                            TP2 grid structure realizing all k^k paths
//   <path>                                 JSON structure file (fields besides the structure
//                                          itself, e.g. a report wrapped around it, are dropped)

struct ResolvedStructure {
  std::string spec;
  /// Canonical structure JSON (exactly the fields of the structure format).
  nlohmann::json structure;
  /// Extra data produced while generating (e.g. search outcome); empty for files.
  nlohmann::json meta = nlohmann::json::object();
  std::string digest;
};

/// Throws invalid_input for malformed specs and schema_error for malformed files.
ResolvedStructure resolve_structure(const std::string& spec);

/// Reduces a structure-bearing JSON document to the structure fields for its kind.
nlohmann::json structure_fields(const nlohmann::json& j);

}  // namespace klab::cli

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "klab/structures/hypergraph.hpp"
#include "klab/structures/relational.hpp"

namespace klab {

// Structure files (UTF-8 JSON, 0-based vertices):
//   {"kind":"hypergraph","r":2,"n":13,"edges":[[0,1],[0,5],...]}
//   {"kind":"tournament","n":4,"arcs":[[u,v],...]}            arc u -> v
//   {"kind":"feq2","objects":N,"parameters":M,"classes":[[[o1,o2],...],...]}
// Every edge must list its vertices in strictly ascending order. Unknown top-level keys
// (e.g. "meta", "certified") are ignored by the loaders.

nlohmann::json to_json(const Hypergraph& h);
nlohmann::json to_json(const Tournament& t);
nlohmann::json to_json(const Feq2Structure& f);

Hypergraph hypergraph_from_json(const nlohmann::json& j);
Tournament tournament_from_json(const nlohmann::json& j);
Feq2Structure feq2_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes via a temporary sibling file and rename, so readers never see a partial file.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

/// Hex SHA-256 of the compact dump of `j` (object keys are sorted, so the dump is canonical).
std::string json_digest(const nlohmann::json& j);

}  // namespace klab

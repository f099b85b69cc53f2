#include "klab/structures/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "klab/error.hpp"

namespace klab {
namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const nlohmann::json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw schema_error(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

void expect_kind(const nlohmann::json& j, const char* kind) {
  if (field(j, "kind") != kind) throw schema_error(std::string("expected kind '") + kind + "'");
}

Vertex vertex_value(const nlohmann::json& v) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw schema_error("vertex must be a non-negative integer");
  return v.get<Vertex>();
}

}  // namespace

nlohmann::json to_json(const Hypergraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges()) edges.push_back(e);
  return {{"kind", "hypergraph"}, {"r", h.arity()}, {"n", h.vertex_count()}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const Tournament& t) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const auto& [u, v] : t.arcs()) arcs.push_back({u, v});
  return {{"kind", "tournament"}, {"n", t.vertex_count()}, {"arcs", std::move(arcs)}};
}

nlohmann::json to_json(const Feq2Structure& f) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t z = 0; z < f.parameter_count(); ++z) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [a, b] : f.blocks(z)) blocks.push_back({a, b});
    classes.push_back(std::move(blocks));
  }
  return {{"kind", "feq2"},
          {"objects", f.object_count()},
          {"parameters", f.parameter_count()},
          {"classes", std::move(classes)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  expect_kind(j, "hypergraph");
  const auto r = count_field(j, "r");
  const auto n = count_field(j, "n");
  const auto& edges = field(j, "edges");
  if (!edges.is_array()) throw schema_error("edges must be an array");
  try {
    Hypergraph h(static_cast<int>(r), n);
    for (const auto& e : edges) {
      if (!e.is_array()) throw schema_error("edge must be an array");
      Edge edge;
      for (const auto& v : e) edge.push_back(vertex_value(v));
      for (std::size_t i = 1; i < edge.size(); ++i) {
        if (edge[i - 1] >= edge[i]) throw schema_error("edge vertices must be strictly ascending");
      }
      if (!h.insert_edge(std::move(edge))) throw schema_error("duplicate edge");
    }
    return h;
  } catch (const invalid_input& e) {
    throw schema_error(e.what());
  }
}

Tournament tournament_from_json(const nlohmann::json& j) {
  expect_kind(j, "tournament");
  const auto n = count_field(j, "n");
  std::vector<std::pair<Vertex, Vertex>> arcs;
  for (const auto& a : field(j, "arcs")) {
    if (!a.is_array() || a.size() != 2) throw schema_error("arc must be a pair");
    arcs.emplace_back(vertex_value(a[0]), vertex_value(a[1]));
  }
  try {
    return Tournament::from_arcs(n, arcs);
  } catch (const invalid_input& e) {
    throw schema_error(e.what());
  }
}

Feq2Structure feq2_from_json(const nlohmann::json& j) {
  expect_kind(j, "feq2");
  const auto objects = count_field(j, "objects");
  const auto parameters = count_field(j, "parameters");
  const auto& classes = field(j, "classes");
  if (!classes.is_array() || classes.size() != parameters) throw schema_error("classes must list every parameter");
  std::vector<std::vector<Feq2Structure::Block>> blocks;
  for (const auto& per_param : classes) {
    auto& out = blocks.emplace_back();
    for (const auto& b : per_param) {
      if (!b.is_array() || b.size() != 2) throw schema_error("feq2 block must be a pair");
      const Vertex x = vertex_value(b[0]);
      const Vertex y = vertex_value(b[1]);
      if (x >= y) throw schema_error("feq2 block must be sorted ascending");
      out.emplace_back(x, y);
    }
  }
  try {
    return Feq2Structure::from_classes(objects, blocks);
  } catch (const invalid_input& e) {
    throw schema_error(e.what());
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw schema_error("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw invalid_input("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out) throw invalid_input("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::string json_digest(const nlohmann::json& j) {
  const std::string text = j.dump();
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr) != 1) {
    throw error("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  char buf[3];
  for (unsigned i = 0; i < length; ++i) {
    const unsigned char c = hash[i];
    std::snprintf(buf, sizeof buf, "%02x", c);
    hex += buf;
  }
  return hex;
}

}  // namespace klab

#include "klab/cli/specs.hpp"

#include <charconv>
#include <filesystem>
#include <set>
#include <vector>

#include "klab/error.hpp"
#include "klab/structures/generators.hpp"
#include "klab/structures/io.hpp"
#include "klab/witnesses/tp2.hpp"

namespace klab::cli {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::uint64_t number(const std::string& text, const std::string& spec) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw invalid_input("bad number '" + text + "' in structure spec '" + spec + "'");
  }
  return value;
}

std::uint64_t keyed(const std::string& field, const std::string& key, const std::string& spec) {
  if (field.rfind(key + "=", 0) != 0) throw invalid_input("expected " + key + "=<value> in '" + spec + "'");
  return number(field.substr(key.size() + 1), spec);
}

ResolvedStructure generated(const std::string& spec) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  ResolvedStructure out;
  out.spec = spec;
  if (kind == "gen") {
    if (parts.size() != 5) throw invalid_input("expected gen:<n>:<r>:<s>:seed=<x>");
    const auto n = number(parts[1], spec), r = number(parts[2], spec), s = number(parts[3], spec);
    if (r < 2 || s <= r) throw invalid_input("gen needs s > r >= 2");
    out.structure = to_json(random_maximal_free(n, static_cast<int>(r), s, keyed(parts[4], "seed", spec)));
    out.meta = {{"s", s}, {"maximal", true}};
  } else if (kind == "circulant") {
    if (parts.size() != 3) throw invalid_input("expected circulant:<n>:<d1>,<d2>,...");
    std::set<std::size_t> diffs;
    for (const auto& d : split(parts[2], ',')) diffs.insert(number(d, spec));
    out.structure = to_json(cyclic_graph(number(parts[1], spec), diffs));
  } else if (kind == "search") {
    if (parts.size() != 5 && parts.size() != 6) throw invalid_input("expected search:<n>:<s>:<target>:seed=<x>[:budget=<b>]");
    const std::size_t budget = parts.size() == 6 ? keyed(parts[5], "budget", spec) : 2000;
    const auto result = search_small_alpha(number(parts[1], spec), number(parts[2], spec), number(parts[3], spec),
                                           budget, keyed(parts[4], "seed", spec));
    out.structure = to_json(result.graph);
    out.meta = {{"s", number(parts[2], spec)}, {"found", result.found}, {"alpha", result.alpha},
                {"origin", result.origin}, {"evaluations", result.evaluations}};
  } else if (kind == "petersen") {
    if (parts.size() != 1) throw invalid_input("petersen takes no arguments");
    out.structure = to_json(petersen_graph());
  } else if (kind == "tournament") {
    if (parts.size() != 3) throw invalid_input("expected tournament:<n>:seed=<x>");
    out.structure = to_json(random_tournament(number(parts[1], spec), keyed(parts[2], "seed", spec)));
  } else if (kind == "tp2grid") {
    if (parts.size() != 2) throw invalid_input("expected tp2grid:<k>");
    const auto k = number(parts[1], spec);
    out.structure = to_json(build_tp2_grid(k, all_paths(k, 100'000)));
  } else {
    throw invalid_input("unknown structure spec '" + spec + "'");
  }
  return out;
}

bool looks_generated(const std::string& spec) {
  static const std::set<std::string> kinds = {"gen", "circulant", "search", "petersen", "tournament", "tp2grid"};
  return kinds.count(split(spec, ':')[0]) != 0 && !std::filesystem::exists(spec);
}

}  // namespace

nlohmann::json structure_fields(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw schema_error("structure JSON needs a \"kind\" field");
  const auto kind = j.at("kind").get<std::string>();
  // round-tripping through the loader validates and canonicalizes
  if (kind == "hypergraph") return to_json(hypergraph_from_json(j));
  if (kind == "tournament") return to_json(tournament_from_json(j));
  if (kind == "feq2") return to_json(feq2_from_json(j));
  throw schema_error("unknown structure kind '" + kind + "'");
}

ResolvedStructure resolve_structure(const std::string& spec) {
  ResolvedStructure out;
  if (looks_generated(spec)) {
    out = generated(spec);
  } else {
    out.spec = spec;
    out.structure = structure_fields(read_json_file(spec));
  }
  out.digest = json_digest(out.structure);
  return out;
}

}  // namespace klab::cli

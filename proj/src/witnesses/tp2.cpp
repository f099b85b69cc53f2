#include "klab/witnesses/tp2.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "klab/error.hpp"

namespace klab {
namespace {

std::size_t path_count(std::size_t k, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / std::max<std::size_t>(k, 1)) return cap + 1;
    total *= k;
  }
  return total;
}

Path path_at(std::size_t k, std::size_t index) {
  Path p(k);
  for (std::size_t i = k; i-- > 0;) {
    p[i] = index % k;
    index /= k;
  }
  return p;
}

bool realizes(const Feq2Structure& f, std::size_t z, std::size_t k, const Path& sigma) {
  for (std::size_t i = 0; i < k; ++i) {
    if (!f.equivalent(z, grid_object(k, i, sigma[i]), grid_target(k, i))) return false;
  }
  return true;
}

std::optional<std::size_t> find_parameter(const Feq2Structure& f, std::size_t k, const Path& sigma) {
  for (std::size_t z = 0; z < f.parameter_count(); ++z) {
    if (realizes(f, z, k, sigma)) return z;
  }
  return std::nullopt;
}

std::size_t row_violations(const Feq2Structure& f, std::size_t k, std::size_t* pairs) {
  std::size_t bad = 0;
  *pairs = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t j2 = j + 1; j2 < k; ++j2) {
        ++*pairs;
        for (std::size_t z = 0; z < f.parameter_count(); ++z) {
          if (f.equivalent(z, grid_object(k, i, j), grid_target(k, i)) &&
              f.equivalent(z, grid_object(k, i, j2), grid_target(k, i))) {
            ++bad;
            break;
          }
        }
      }
    }
  }
  return bad;
}

void check_grid(const Feq2Structure& f, std::size_t k) {
  if (k == 0) throw invalid_input("grid size k must be positive");
  if (f.object_count() < k * k + k) {
    throw grid_too_small("a " + std::to_string(k) + "x" + std::to_string(k) + " grid needs " +
                         std::to_string(k * k + k) + " objects, the structure has " +
                         std::to_string(f.object_count()));
  }
}

std::vector<Certification> certifications(std::size_t k, std::size_t pairs, std::size_t bad_rows,
                                          std::size_t checked, std::size_t expected_paths, std::size_t missing) {
  const auto count = [](std::size_t v) { return make_rational(static_cast<std::int64_t>(v)); };
  return {
      certify("row_pairs_checked", count(pairs), "==", count(k * (k * (k - 1) / 2))),
      certify_zero("row_pair_violations", bad_rows),
      certify("paths_checked", count(checked), "==", count(expected_paths)),
      certify_zero("paths_without_parameter", missing),
  };
}

}  // namespace

std::vector<Path> all_paths(std::size_t k, std::size_t cap) {
  const std::size_t total = path_count(k, cap);
  if (total > cap) throw cap_exceeded("k^k exceeds " + std::to_string(cap) + " paths");
  std::vector<Path> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) out.push_back(path_at(k, i));
  return out;
}

std::vector<Path> sample_paths(std::size_t k, std::size_t count, std::uint64_t seed) {
  constexpr std::size_t kLimit = std::size_t{1} << 62;
  const std::size_t total = path_count(k, kLimit);
  if (total > kLimit) throw cap_exceeded("k^k too large to sample from");
  if (count >= total) return all_paths(k, total);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, total - 1);
  std::set<std::size_t> chosen;
  while (chosen.size() < count) chosen.insert(pick(rng));
  std::vector<Path> out;
  for (std::size_t i : chosen) out.push_back(path_at(k, i));
  return out;
}

Feq2Structure build_tp2_grid(std::size_t k, const std::vector<Path>& paths) {
  if (k == 0) throw invalid_input("grid size k must be positive");
  const std::size_t objects = k * k + k;
  std::vector<std::vector<Feq2Structure::Block>> classes;
  for (const auto& sigma : paths) {
    if (sigma.size() != k) throw invalid_input("path length differs from k");
    std::vector<bool> used(objects, false);
    std::vector<Feq2Structure::Block> blocks;
    for (std::size_t i = 0; i < k; ++i) {
      if (sigma[i] >= k) throw invalid_input("path leaves the grid");
      const Vertex b = grid_object(k, i, sigma[i]), c = grid_target(k, i);
      blocks.emplace_back(b, c);
      used[b] = used[c] = true;
    }
    std::optional<Vertex> pending;
    for (Vertex v = 0; v < objects; ++v) {
      if (used[v]) continue;
      if (pending) {
        blocks.emplace_back(*pending, v);
        pending.reset();
      } else {
        pending = v;
      }
    }
    classes.push_back(std::move(blocks));
  }
  return Feq2Structure::from_classes(objects, classes);
}

WitnessReport tp2_witness(const Feq2Structure& f, std::size_t k, const std::vector<Path>& paths_to_check) {
  check_grid(f, k);
  WitnessReport report;
  report.theorem = "tp2";
  std::size_t pairs = 0;
  const std::size_t bad_rows = row_violations(f, k, &pairs);
  nlohmann::json paths = nlohmann::json::array();
  std::size_t missing = 0;
  for (const auto& sigma : paths_to_check) {
    if (sigma.size() != k || std::any_of(sigma.begin(), sigma.end(), [&](std::size_t j) { return j >= k; })) {
      throw invalid_input("path does not fit the grid");
    }
    const auto z = find_parameter(f, k, sigma);
    if (!z) ++missing;
    paths.push_back({{"path", sigma}, {"parameter", z ? nlohmann::json(*z) : nlohmann::json(nullptr)}});
  }
  report.log.push_back(std::to_string(pairs) + " same-row pairs scanned against " +
                       std::to_string(f.parameter_count()) + " parameters");
  report.log.push_back(std::to_string(paths_to_check.size() - missing) + " of " +
                       std::to_string(paths_to_check.size()) + " paths realized");
  report.witness = {{"k", k}, {"paths", paths}, {"parameters", f.parameter_count()}};
  report.certified = certifications(k, pairs, bad_rows, paths_to_check.size(), paths_to_check.size(), missing);
  return report;
}

std::vector<Certification> recheck_tp2(const nlohmann::json& witness, const Feq2Structure& f) {
  const std::size_t k = witness.at("k").get<std::size_t>();
  check_grid(f, k);
  std::size_t pairs = 0;
  const std::size_t bad_rows = row_violations(f, k, &pairs);
  std::size_t missing = 0, checked = 0;
  for (const auto& entry : witness.at("paths")) {
    const auto sigma = entry.at("path").get<Path>();
    if (sigma.size() != k || std::any_of(sigma.begin(), sigma.end(), [&](std::size_t j) { return j >= k; })) {
      throw schema_error("path does not fit the grid");
    }
    ++checked;
    const auto& z = entry.at("parameter");
    if (z.is_null()) {
      if (!find_parameter(f, k, sigma)) ++missing;
      continue;
    }
    const auto index = z.get<std::size_t>();
    if (index >= f.parameter_count() || !realizes(f, index, k, sigma)) ++missing;
  }
  return certifications(k, pairs, bad_rows, checked, witness.at("paths").size(), missing);
}

}  // namespace klab

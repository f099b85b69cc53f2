#include "klab/measures/approximation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "klab/error.hpp"
#include "klab/logic/evaluate.hpp"
#include "klab/parallel.hpp"

namespace klab {

ParamDomain ParamDomain::all(const Hypergraph& host, std::size_t arity) {
  ParamDomain d;
  d.vertices.resize(host.vertex_count());
  std::iota(d.vertices.begin(), d.vertices.end(), Vertex{0});
  d.arity = arity;
  return d;
}

std::size_t ParamDomain::size() const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (!vertices.empty() && total > std::numeric_limits<std::size_t>::max() / vertices.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= vertices.size();
  }
  return total;
}

Tuple ParamDomain::at(std::size_t index) const {
  Tuple t(arity);
  for (std::size_t i = arity; i-- > 0;) {
    t[i] = vertices[index % vertices.size()];
    index /= vertices.size();
  }
  return t;
}

nlohmann::json ApproxReport::to_json() const {
  return {
      {"epsilon_target", rational_to_json(epsilon_target)},
      {"sup_error", rational_to_json(sup_error)},
      {"argmax_params", argmax_params},
      {"certified_bound", certified_bound ? rational_to_json(*certified_bound) : nlohmann::json(nullptr)},
      {"samples_scanned", samples_scanned},
      {"exhaustive", exhaustive},
  };
}

std::size_t satisfying_count(const Hypergraph& host, const std::vector<Tuple>& points, const Formula& phi,
                             std::span<const Vertex> params) {
  std::size_t count = 0;
  for (const auto& a : points) {
    if (evaluate(host, phi, Assignment{a, params})) ++count;
  }
  return count;
}

ApproxReport sup_error(const std::function<Rational(std::span<const Vertex>)>& target,
                       const Hypergraph& host, const std::vector<Tuple>& points, const PhiPartition& phi,
                       const ParamDomain& domain, ScanMode mode, const Rational& epsilon_target) {
  phi.validate();
  if (points.empty()) throw invalid_input("approximating sequence is empty");
  for (const auto& a : points) {
    if (a.size() != static_cast<std::size_t>(phi.object_arity)) {
      throw invalid_input("approximating tuples must match the object arity");
    }
  }
  if (domain.arity != static_cast<std::size_t>(phi.param_arity)) {
    throw invalid_input("parameter domain arity does not match the formula");
  }
  const std::size_t domain_size = domain.size();
  if (domain_size == 0) throw invalid_input("empty parameter domain");
  for (Vertex v : domain.vertices) {
    if (v >= host.vertex_count()) throw invalid_input("parameter domain leaves the host");
  }

  std::vector<std::size_t> indices;
  if (mode.exhaustive) {
    if (domain_size == std::numeric_limits<std::size_t>::max()) throw cap_exceeded("parameter domain too large");
    indices.resize(domain_size);
    std::iota(indices.begin(), indices.end(), std::size_t{0});
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::size_t> pick(0, domain_size - 1);
    indices.resize(mode.count);
    for (auto& i : indices) i = pick(rng);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  }
  if (indices.empty()) throw invalid_input("no parameter tuples to scan");

  const Rational n = make_rational(static_cast<std::int64_t>(points.size()));
  std::vector<Rational> errors(indices.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Tuple b = domain.at(indices[i]);
      const Rational av = make_rational(static_cast<std::int64_t>(satisfying_count(host, points, phi.formula, b))) / n;
      errors[i] = abs(target(b) - av);
    }
  };
  const std::size_t workers = std::min(thread_budget(), std::max<std::size_t>(1, indices.size() / 64));
  if (workers <= 1) {
    work(0, indices.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (indices.size() + workers - 1) / workers;
    for (std::size_t begin = 0; begin < indices.size(); begin += chunk) {
      pool.emplace_back(work, begin, std::min(indices.size(), begin + chunk));
    }
  }

  // indices are ascending, so the first maximum is the lexicographically least argmax
  std::size_t best = 0;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i] > errors[best]) best = i;
  }
  ApproxReport report;
  report.epsilon_target = epsilon_target;
  report.sup_error = errors[best];
  report.argmax_params = domain.at(indices[best]);
  report.samples_scanned = indices.size();
  report.exhaustive = mode.exhaustive;
  return report;
}

ApproxReport sup_error(const TypeOracle& oracle, const Hypergraph& host, const std::vector<Tuple>& points,
                       const PhiPartition& phi, const ParamDomain& domain, ScanMode mode,
                       const Rational& epsilon_target) {
  const auto decide = oracle.bind(phi, host);
  return sup_error([&](std::span<const Vertex> b) { return Rational(decide(b) ? 1 : 0); }, host, points, phi,
                   domain, mode, epsilon_target);
}

ApproxReport sup_error(const FiniteMeasure& target, const std::vector<Tuple>& points, const PhiPartition& phi,
                       const ParamDomain& domain, ScanMode mode, const Rational& epsilon_target) {
  return sup_error([&](std::span<const Vertex> b) { return mu_eval(target, phi, b); }, *target.host(), points, phi,
                   domain, mode, epsilon_target);
}

}  // namespace klab

#include "klab/measures/finite_measure.hpp"

#include <algorithm>
#include <string>

#include "klab/error.hpp"
#include "klab/logic/evaluate.hpp"

namespace klab {
namespace {

std::vector<PointMass> merge(std::vector<PointMass> masses) {
  std::sort(masses.begin(), masses.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  std::vector<PointMass> out;
  for (auto& m : masses) {
    if (!out.empty() && out.back().point == m.point) {
      out.back().weight += m.weight;
    } else {
      out.push_back(std::move(m));
    }
  }
  std::erase_if(out, [](const PointMass& m) { return m.weight == 0; });
  return out;
}

bool same_host(const FiniteMeasure::Host& a, const FiniteMeasure::Host& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace

FiniteMeasure::FiniteMeasure(Host host, std::size_t arity, std::vector<PointMass> support)
    : host_(std::move(host)), arity_(arity), support_(std::move(support)) {}

FiniteMeasure FiniteMeasure::dirac(Host host, Tuple point) {
  return convex(std::move(host), {PointMass{std::move(point), Rational(1)}});
}

FiniteMeasure FiniteMeasure::average(Host host, const std::vector<Tuple>& points) {
  if (points.empty()) throw invalid_input("average of an empty point sequence");
  const Rational w = make_rational(1, static_cast<std::int64_t>(points.size()));
  std::vector<PointMass> masses;
  masses.reserve(points.size());
  for (const auto& p : points) masses.push_back({p, w});
  return convex(std::move(host), std::move(masses));
}

FiniteMeasure FiniteMeasure::convex(Host host, std::vector<PointMass> masses) {
  if (!host) throw invalid_input("measure without a host structure");
  if (masses.empty()) throw invalid_input("measure with empty support");
  const std::size_t arity = masses.front().point.size();
  if (arity == 0) throw invalid_input("measure on 0-tuples");
  Rational total = 0;
  for (const auto& m : masses) {
    if (m.point.size() != arity) throw invalid_input("support tuples of different arity");
    for (Vertex v : m.point) {
      if (v >= host->vertex_count()) throw invalid_input("support vertex " + std::to_string(v) + " outside the host");
    }
    if (m.weight < 0) throw invalid_input("negative weight");
    total += m.weight;
  }
  if (total != 1) throw invalid_input("weights sum to " + to_string(total) + ", not 1");
  return FiniteMeasure(std::move(host), arity, merge(std::move(masses)));
}

Rational FiniteMeasure::mass(const std::function<bool(std::span<const Vertex>)>& predicate) const {
  Rational total = 0;
  for (const auto& m : support_) {
    if (predicate(m.point)) total += m.weight;
  }
  return total;
}

bool operator==(const FiniteMeasure& a, const FiniteMeasure& b) {
  return a.arity_ == b.arity_ && same_host(a.host_, b.host_) && a.support_ == b.support_;
}

Rational mu_eval(const FiniteMeasure& mu, const Formula& phi, std::span<const Vertex> params) {
  if (static_cast<std::size_t>(phi.max_object_index()) > mu.arity()) {
    throw invalid_input("formula uses x" + std::to_string(phi.max_object_index()) + " but the measure has arity " +
                        std::to_string(mu.arity()));
  }
  return mu.mass([&](std::span<const Vertex> point) {
    return evaluate(*mu.host(), phi, Assignment{point, params});
  });
}

Rational mu_eval(const FiniteMeasure& mu, const PhiPartition& phi, std::span<const Vertex> params) {
  if (static_cast<std::size_t>(phi.object_arity) != mu.arity()) {
    throw invalid_input("object arity " + std::to_string(phi.object_arity) + " does not match measure arity " +
                        std::to_string(mu.arity()));
  }
  return mu_eval(mu, phi.formula, params);
}

FiniteMeasure product(const FiniteMeasure& mu, const FiniteMeasure& nu) {
  if (!same_host(mu.host(), nu.host())) throw invalid_input("product of measures on different hosts");
  std::vector<PointMass> out;
  out.reserve(mu.support().size() * nu.support().size());
  for (const auto& a : mu.support()) {
    for (const auto& b : nu.support()) {
      Tuple t = a.point;
      t.insert(t.end(), b.point.begin(), b.point.end());
      out.push_back({std::move(t), a.weight * b.weight});
    }
  }
  return FiniteMeasure::convex(mu.host(), std::move(out));
}

FiniteMeasure power(const FiniteMeasure& mu, std::size_t n, std::size_t cap) {
  if (n == 0) throw invalid_input("power exponent must be at least 1");
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (size > cap / mu.support().size()) {
      throw cap_exceeded("power support exceeds " + std::to_string(cap) + " tuples");
    }
    size *= mu.support().size();
  }
  FiniteMeasure out = mu;
  for (std::size_t i = 1; i < n; ++i) out = product(out, mu);
  return out;
}

FiniteMeasure localize(const FiniteMeasure& mu, const std::function<bool(std::span<const Vertex>)>& in_x) {
  std::vector<PointMass> kept;
  Rational total = 0;
  for (const auto& m : mu.support()) {
    if (in_x(m.point)) {
      kept.push_back(m);
      total += m.weight;
    }
  }
  if (total == 0) throw zero_mass();
  for (auto& m : kept) m.weight /= total;
  return FiniteMeasure::convex(mu.host(), std::move(kept));
}

}  // namespace klab

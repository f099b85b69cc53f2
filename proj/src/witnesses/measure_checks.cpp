#include "klab/witnesses/measure_checks.hpp"

#include <string>

#include "klab/error.hpp"
#include "klab/logic/evaluate.hpp"
#include "klab/logic/random_formula.hpp"
#include "klab/measures/approximation.hpp"

namespace klab {
namespace {

struct Tally {
  std::size_t normalization = 0, grid = 0, associativity = 0, localization = 0, product_approx = 0;
};

Tuple random_tuple(std::size_t arity, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  Tuple t(arity);
  for (auto& v : t) v = pick(rng);
  return t;
}

Rational total_weight(const FiniteMeasure& m) {
  Rational t = 0;
  for (const auto& p : m.support()) t += p.weight;
  return t;
}

// x_1..x_a, x_{a+1}..x_{a+b} ; y_1..y_p  becomes  x_{1..b} ; y_1..y_p, y_{p+1..p+a}
Formula second_factor_view(const Formula& phi, int a, int p) {
  return rename_terms(phi, [a, p](const Term& t) {
    if (t.sort != Term::Sort::object) return t;
    return t.index <= a ? Term::y(p + t.index) : Term::x(t.index - a);
  });
}

void run_trial(std::mt19937_64& rng, Tally& tally) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
  const auto host = std::make_shared<const Hypergraph>(random_graph(n, rng));
  const int a = std::uniform_int_distribution<int>(1, 2)(rng);
  const int b = std::uniform_int_distribution<int>(1, 2)(rng);
  const int p = std::uniform_int_distribution<int>(0, 2)(rng);
  const FiniteMeasure mu = random_measure(host, a, 4, rng);
  const FiniteMeasure nu = random_measure(host, b, 4, rng);
  const FiniteMeasure lambda = random_measure(host, 1, 3, rng);
  const Formula phi = random_formula(rng, FormulaShape{a + b, p, 2, 3});
  const Tuple params = random_tuple(static_cast<std::size_t>(p), n, rng);

  const FiniteMeasure mn = product(mu, nu);
  for (const auto* m : {&mu, &nu, &lambda, &mn}) {
    if (total_weight(*m) != 1) ++tally.normalization;
  }

  // grid identity against a fibre-by-fibre sum
  const Formula fibre = objects_to_params(phi, a, b, p);
  Rational by_fibres = 0;
  for (const auto& q : nu.support()) {
    Tuple extended = params;
    extended.insert(extended.end(), q.point.begin(), q.point.end());
    by_fibres += q.weight * mu_eval(mu, fibre, extended);
  }
  if (mu_eval(mn, phi, params) != by_fibres) ++tally.grid;

  if (product(mn, lambda) != product(mu, product(nu, lambda))) ++tally.associativity;

  const Vertex pivot = mu.support().front().point.front();
  const auto in_x = [pivot](std::span<const Vertex> t) { return t.front() <= pivot; };
  const FiniteMeasure loc = localize(mu, in_x);
  const Rational mass_x = mu.mass(in_x);
  const Formula psi = objects_to_params(phi, a, b, p);
  std::vector<Vertex> fibre_params = params;
  for (int i = 0; i < b; ++i) fibre_params.push_back(pivot);
  const Rational joint = mu.mass([&](std::span<const Vertex> t) {
    return in_x(t) && evaluate(*host, psi, Assignment{t, fibre_params});
  });
  if (total_weight(loc) != 1 || loc.mass(in_x) != 1 || mu_eval(loc, psi, fibre_params) != joint / mass_x) {
    ++tally.localization;
  }

  // product of approximations: grid of two sampled sequences against mu x nu
  std::vector<Tuple> as, bs;
  const std::size_t m_points = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  const std::size_t n_points = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
  for (std::size_t i = 0; i < m_points; ++i) as.push_back(random_tuple(a, n, rng));
  for (std::size_t j = 0; j < n_points; ++j) bs.push_back(random_tuple(b, n, rng));
  std::vector<Tuple> grid;
  for (const auto& x : as) {
    for (const auto& y : bs) {
      Tuple t = x;
      t.insert(t.end(), y.begin(), y.end());
      grid.push_back(std::move(t));
    }
  }
  const PhiPartition theta1{objects_to_params(phi, a, b, p), a, p + b};
  const PhiPartition theta2{second_factor_view(phi, a, p), b, p + a};
  const PhiPartition whole{phi, a + b, p};
  const Rational e1 = sup_error(mu, as, theta1, ParamDomain::all(*host, p + b), ScanMode::full(), 0).sup_error;
  const Rational e2 = sup_error(nu, bs, theta2, ParamDomain::all(*host, p + a), ScanMode::full(), 0).sup_error;
  const Rational e = sup_error(mn, grid, whole, ParamDomain::all(*host, p), ScanMode::full(), 0).sup_error;
  if (e > e1 + e2) ++tally.product_approx;
}

std::vector<Certification> certifications(const Tally& t) {
  return {
      certify_zero("normalization_failures", t.normalization),
      certify_zero("grid_identity_failures", t.grid),
      certify_zero("associativity_failures", t.associativity),
      certify_zero("localization_failures", t.localization),
      certify_zero("product_approximation_failures", t.product_approx),
  };
}

Tally run_all(std::uint64_t seed, std::size_t trials) {
  std::mt19937_64 rng(seed);
  Tally tally;
  for (std::size_t i = 0; i < trials; ++i) run_trial(rng, tally);
  return tally;
}

}  // namespace

Hypergraph random_graph(std::size_t n, std::mt19937_64& rng) {
  Hypergraph g(2, n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng() & 1U) g.insert_edge({u, v});
    }
  }
  return g;
}

FiniteMeasure random_measure(const FiniteMeasure::Host& host, std::size_t arity, std::size_t max_support,
                             std::mt19937_64& rng) {
  const std::size_t size = std::uniform_int_distribution<std::size_t>(1, max_support)(rng);
  std::vector<std::int64_t> raw(size);
  std::int64_t total = 0;
  for (auto& w : raw) total += (w = std::uniform_int_distribution<std::int64_t>(1, 5)(rng));
  std::vector<PointMass> masses;
  for (std::size_t i = 0; i < size; ++i) {
    masses.push_back({random_tuple(arity, host->vertex_count(), rng), make_rational(raw[i], total)});
  }
  return FiniteMeasure::convex(host, std::move(masses));
}

WitnessReport measure_self_check(std::uint64_t seed, std::size_t trials) {
  WitnessReport report;
  report.theorem = "measures";
  report.seed = seed;
  report.witness = {{"trials", trials}};
  report.log.push_back(std::to_string(trials) + " random trials on hosts with at most 6 vertices");
  report.certified = certifications(run_all(seed, trials));
  return report;
}

std::vector<Certification> recheck_measures(const nlohmann::json& witness, std::uint64_t seed) {
  return certifications(run_all(seed, witness.at("trials").get<std::size_t>()));
}

}  // namespace klab

#include "klab/coloring/coloring.hpp"

#include <gmpxx.h>

#include <string>

#include "klab/error.hpp"

namespace klab {
namespace {

void check_coloring(const WeightedHypergraph& h, const Coloring& chi) {
  if (chi.size() != h.vertex_count()) {
    throw invalid_input("colouring covers " + std::to_string(chi.size()) + " of " +
                        std::to_string(h.vertex_count()) + " vertices");
  }
  for (int c : chi) {
    if (c < 1 || c > h.arity()) throw invalid_input("colour " + std::to_string(c) + " outside 1..r");
  }
}

bool splits(const Edge& e, const Coloring& chi) {
  unsigned seen = 0;
  for (Vertex v : e) {
    const unsigned bit = 1U << chi[v];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

struct EdgeState {
  unsigned used_mask = 0;
  int colored = 0;
  bool repeated = false;
};

}  // namespace

Rational weight_of(const WeightedHypergraph& h, const Coloring& chi) {
  check_coloring(h, chi);
  Rational total = 0;
  for (const auto& [edge, w] : h.weights()) {
    if (splits(edge, chi)) total += w;
  }
  return total;
}

Rational guarantee_value(const WeightedHypergraph& h) {
  const int r = h.arity();
  return factorial(static_cast<unsigned>(r)) / power(Rational(r), static_cast<unsigned>(r)) * h.total_weight();
}

Rational split_probability(int r, int used, int uncolored) {
  if (uncolored > r - used) return 0;
  Rational p = 1;
  for (int i = 0; i < uncolored; ++i) p *= make_rational(r - used - i, r);
  return p;
}

GreedyTrace greedy_coloring_traced(const WeightedHypergraph& h) {
  const int r = h.arity();
  if (r > 30) throw invalid_input("arity too large for colouring");
  const std::size_t n = h.vertex_count();

  std::vector<std::vector<std::size_t>> incident(n);
  std::vector<const Rational*> weight;
  std::vector<EdgeState> state;
  for (const auto& [edge, w] : h.weights()) {
    for (Vertex v : edge) incident[v].push_back(weight.size());
    weight.push_back(&w);
    state.emplace_back();
  }
  std::vector<std::vector<Rational>> prob(r + 1, std::vector<Rational>(r + 1));
  for (int d = 0; d <= r; ++d) {
    for (int u = 0; d + u <= r; ++u) prob[d][u] = split_probability(r, d, u);
  }
  const auto value = [&](const EdgeState& s) -> const Rational& {
    static const Rational zero = 0;
    return s.repeated ? zero : prob[s.colored][r - s.colored];
  };

  GreedyTrace trace;
  trace.coloring.assign(n, 0);
  Rational expectation = 0;
  for (std::size_t e = 0; e < state.size(); ++e) expectation += *weight[e] * value(state[e]);
  trace.expectations.push_back(expectation);

  for (std::size_t v = 0; v < n; ++v) {
    int best_color = 1;
    Rational best_delta;
    for (int c = 1; c <= r; ++c) {
      Rational delta = 0;
      for (std::size_t e : incident[v]) {
        EdgeState next = state[e];
        const unsigned bit = 1U << c;
        next.repeated = next.repeated || (next.used_mask & bit) != 0;
        next.used_mask |= bit;
        ++next.colored;
        delta += *weight[e] * (value(next) - value(state[e]));
      }
      if (c == 1 || delta > best_delta) {
        best_delta = delta;
        best_color = c;
      }
    }
    trace.coloring[v] = best_color;
    for (std::size_t e : incident[v]) {
      const unsigned bit = 1U << best_color;
      state[e].repeated = state[e].repeated || (state[e].used_mask & bit) != 0;
      state[e].used_mask |= bit;
      ++state[e].colored;
    }
    expectation += best_delta;
    trace.expectations.push_back(expectation);
  }
  return trace;
}

Coloring greedy_coloring(const WeightedHypergraph& h) { return greedy_coloring_traced(h).coloring; }

BruteForceResult brute_best(const WeightedHypergraph& h, std::size_t cap) {
  const std::size_t n = h.vertex_count();
  if (n > cap) {
    throw cap_exceeded("brute force is limited to " + std::to_string(cap) + " vertices, got " + std::to_string(n));
  }
  const int r = h.arity();
  if (r > 30) throw invalid_input("arity too large for colouring");

  // Integer weights over a common denominator keep the inner loop cheap.
  mpz_class denom = 1;
  for (const auto& [edge, w] : h.weights()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), w.get_den_mpz_t());
  std::vector<Edge> edges;
  std::vector<mpz_class> scaled;
  std::vector<std::vector<std::size_t>> incident(n);
  for (const auto& [edge, w] : h.weights()) {
    for (Vertex v : edge) incident[v].push_back(edges.size());
    edges.push_back(edge);
    scaled.push_back(w.get_num() * (denom / w.get_den()));
  }

  Coloring chi(n, 1);
  std::vector<char> split(edges.size());
  mpz_class current = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    split[e] = splits(edges[e], chi);
    if (split[e]) current += scaled[e];
  }
  mpz_class best = current, sum = 0;
  Coloring best_chi = chi;
  mpz_class count = 0;

  const auto recolor = [&](std::size_t v, int c) {
    chi[v] = c;
    for (std::size_t e : incident[v]) {
      const bool now = splits(edges[e], chi);
      if (now != static_cast<bool>(split[e])) {
        if (now) current += scaled[e]; else current -= scaled[e];
        split[e] = now;
      }
    }
  };

  while (true) {
    sum += current;
    ++count;
    if (current > best) {
      best = current;
      best_chi = chi;
    }
    // odometer with the last vertex as the fastest digit: lexicographic order
    std::size_t pos = n;
    while (pos > 0 && chi[pos - 1] == r) {
      recolor(pos - 1, 1);
      --pos;
    }
    if (pos == 0) break;
    recolor(pos - 1, chi[pos - 1] + 1);
  }

  BruteForceResult out;
  out.best = std::move(best_chi);
  out.best_value = Rational(best, denom);
  out.best_value.canonicalize();
  out.average = Rational(sum, denom * count);
  out.average.canonicalize();
  return out;
}

}  // namespace klab

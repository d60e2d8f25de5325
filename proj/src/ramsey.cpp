#include "kdiv/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "kdiv/errors.hpp"
#include "kdiv/formats.hpp"
#include "kdiv/oracles.hpp"

namespace kdiv {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::counterexample:
      return "COUNTEREXAMPLE";
    case Verdict::inconclusive:
      return "INCONCLUSIVE";
    case Verdict::invalid:
      return "INVALID";
  }
  return "INCONCLUSIVE";
}

RamseyReport verify_counterexample(const Graph& h, std::size_t t, std::size_t cap) {
  check_cap("verify_counterexample", h.order(), cap);
  RamseyReport r;
  r.n = h.order();
  r.t = t;
  r.graph6 = encode_graph6(h);
  r.omega_H = max_clique(h).size;
  r.alpha_H = max_independent_set(h).size;
  const Graph g = complement(h);
  r.alpha_G = max_independent_set(g).size;
  r.omega_G = max_clique(g).size;
  r.chi_lb = r.n == 0 ? 0 : std::max(r.omega_G, (r.n + r.alpha_G - 1) / r.alpha_G);
  r.hoang_bound = r.omega_G * r.omega_G;
  if (r.omega_H >= 4) {
    r.verdict = Verdict::invalid;
  } else if (r.chi_lb > r.hoang_bound) {
    r.verdict = Verdict::counterexample;
  } else {
    r.verdict = Verdict::inconclusive;
  }
  return r;
}

nlohmann::ordered_json to_json(const RamseyReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["omega_H"] = r.omega_H;
  j["alpha_H"] = r.alpha_H;
  j["t"] = r.t;
  j["alpha_G"] = r.alpha_G;
  j["omega_G"] = r.omega_G;
  j["chi_lb"] = r.chi_lb;
  j["hoang_bound"] = r.hoang_bound;
  j["verdict"] = to_string(r.verdict);
  j["graph6"] = r.graph6;
  return j;
}

std::vector<TScanRow> required_t_scan(double c, std::size_t t_max) {
  if (!(c > 0) || !std::isfinite(c)) throw std::invalid_argument("required_t_scan: c must be a positive number");
  std::vector<TScanRow> rows;
  // ln t > 1 from t = 3 on; starting at 4 matches R(4, t) being nontrivial.
  for (std::size_t t = 4; t <= t_max; ++t) {
    const double td = static_cast<double>(t);
    const double ln = std::log(td);
    TScanRow row;
    row.t = t;
    row.lhs = c * td * td * td / (ln * ln * ln * ln) - 1.0;
    row.rhs = 3.0 * (td - 1.0) * (td - 1.0);
    row.satisfied = row.lhs > row.rhs;
    rows.push_back(row);
  }
  return rows;
}

namespace {

// Number of r-subsets of `candidates` that are cliques under `adjacent_to`.
template <typename Adjacency>
std::uint64_t count_cliques(const Adjacency& adjacent_to, VertexSet candidates, std::size_t r) {
  if (r == 0) return 1;
  if (r == 1) return candidates.size();
  std::uint64_t total = 0;
  while (candidates.size() >= r) {
    const Vertex v = candidates.first();
    candidates.erase(v);
    total += count_cliques(adjacent_to, candidates & adjacent_to(v), r - 1);
  }
  return total;
}

struct RowsAdjacency {
  std::span<const VertexSet> rows;
  const VertexSet& operator()(Vertex v) const { return rows[v]; }
};

struct RowsNonAdjacency {
  std::span<const VertexSet> rows;
  VertexSet all;
  VertexSet operator()(Vertex v) const {
    VertexSet out = all - rows[v];
    out.erase(v);
    return out;
  }
};

std::uint64_t count_violations(std::span<const VertexSet> rows, std::size_t alpha_target) {
  const VertexSet all = VertexSet::full(rows.size());
  return count_cliques(RowsAdjacency{rows}, all, 4) +
         count_cliques(RowsNonAdjacency{rows, all}, all, alpha_target + 1);
}

}  // namespace

std::uint64_t count_violations(const Graph& g, std::size_t alpha_target) {
  return count_violations(g.rows(), alpha_target);
}

std::int64_t flip_delta(std::span<const VertexSet> rows, Vertex u, Vertex v, std::size_t alpha_target) {
  if (u == v || u >= rows.size() || v >= rows.size()) throw std::invalid_argument("flip_delta: bad pair");
  const VertexSet all = VertexSet::full(rows.size());
  const RowsNonAdjacency non_adjacent{rows, all};
  // K4s through the pair: edges inside the common neighbourhood.
  const auto k4 = static_cast<std::int64_t>(count_cliques(RowsAdjacency{rows}, rows[u] & rows[v], 2));
  // Independent s-sets through the pair: independent (s-2)-sets among common non-neighbours.
  VertexSet outside = non_adjacent(u) & non_adjacent(v);
  outside.erase(u);
  outside.erase(v);
  const std::size_t s = alpha_target + 1;
  const auto independent =
      s < 2 ? std::int64_t{0} : static_cast<std::int64_t>(count_cliques(non_adjacent, outside, s - 2));
  return rows[u].contains(v) ? independent - k4 : k4 - independent;
}

SearchResult search_k4_free(std::size_t n, std::size_t alpha_target, std::uint64_t budget, std::uint64_t seed,
                            double temperature) {
  if (n > 64) throw std::invalid_argument("search_k4_free: n must be at most 64");
  if (n < 2) throw std::invalid_argument("search_k4_free: n must be at least 2");
  if (alpha_target < 1) throw std::invalid_argument("search_k4_free: alpha_target must be at least 1");

  constexpr std::uint64_t restarts = 10;
  const std::uint64_t per_restart = std::max<std::uint64_t>(1, budget / restarts);
  const std::uint64_t pair_count = n * (n - 1) / 2;
  std::vector<Edge> pairs;
  pairs.reserve(pair_count);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);

  SearchResult best;
  bool have_best = false;
  std::string best_g6;
  std::uint64_t total_steps = 0;

  for (std::uint64_t restart = 0; restart < restarts; ++restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);

    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const auto& [i, j] : pairs)
      if (rng() >> 63) {
        rows[i].insert(j);
        rows[j].insert(i);
      }
    std::uint64_t violations = count_violations(rows, alpha_target);
    std::vector<VertexSet> best_rows = rows;
    std::uint64_t best_violations = violations;

    for (std::uint64_t step = 0; step < per_restart && violations > 0; ++step) {
      ++total_steps;
      const auto [u, v] = pairs[rng() % pair_count];
      const std::int64_t delta = flip_delta(rows, u, v, alpha_target);
      // Sideways moves always pass; uphill ones with Boltzmann probability.
      if (delta > 0) {
        const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (!(temperature > 0) || draw >= std::exp(-static_cast<double>(delta) / temperature)) continue;
      }
      if (rows[u].contains(v)) {
        rows[u].erase(v);
        rows[v].erase(u);
      } else {
        rows[u].insert(v);
        rows[v].insert(u);
      }
      violations = static_cast<std::uint64_t>(static_cast<std::int64_t>(violations) + delta);
      if (violations < best_violations) {
        best_violations = violations;
        best_rows = rows;
      }
    }
    rows = std::move(best_rows);
    violations = best_violations;

    GraphBuilder builder(n);
    for (const auto& [i, j] : pairs)
      if (rows[i].contains(j)) builder.add_edge(i, j);
    Graph candidate = builder.build();
    std::string g6 = encode_graph6(candidate);
    if (!have_best || violations < best.violations || (violations == best.violations && g6 < best_g6)) {
      best.graph = std::move(candidate);
      best.violations = violations;
      best_g6 = std::move(g6);
      have_best = true;
    }
  }
  best.steps = total_steps;
  best.report = verify_counterexample(best.graph, alpha_target + 1);
  return best;
}

}  // namespace kdiv

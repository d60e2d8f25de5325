#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kdiv/graph.hpp"

namespace kdiv {

enum class Verdict { counterexample, inconclusive, invalid };

std::string_view to_string(Verdict v);

/// Evaluation of a candidate H against the complement argument: G = H̄ has
/// α(G) = ω(H) <= 3, χ(G) >= |V| / α(G), and a perfectly divisible G would
/// need χ(G) <= ω(G)².
struct RamseyReport {
  std::size_t n = 0;
  std::size_t omega_H = 0;
  std::size_t alpha_H = 0;
  std::size_t t = 0;
  std::size_t alpha_G = 0;
  std::size_t omega_G = 0;
  std::size_t chi_lb = 0;
  std::size_t hoang_bound = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string graph6;
};

inline constexpr std::size_t default_ramsey_cap = 64;

/// INVALID iff ω(H) >= 4; COUNTEREXAMPLE iff ω(H) <= 3 and chi_lb > ω(G)²;
/// INCONCLUSIVE otherwise. χ(G) itself is never computed.
RamseyReport verify_counterexample(const Graph& h, std::size_t t, std::size_t cap = default_ramsey_cap);

/// Field names as in RamseyReport; the graph is carried as "graph6".
nlohmann::ordered_json to_json(const RamseyReport& report);

struct TScanRow {
  std::size_t t = 0;
  double lhs = 0;  // c·t³ / ln⁴t − 1
  double rhs = 0;  // 3(t−1)²
  bool satisfied = false;
};

/// Tabulates t = 4..t_max. Natural logarithm throughout. Throws
/// std::invalid_argument unless c > 0.
std::vector<TScanRow> required_t_scan(double c, std::size_t t_max);

struct SearchResult {
  Graph graph;
  std::size_t violations = 0;
  RamseyReport report;
  std::uint64_t steps = 0;
};

/// Number of K4s plus number of independent (alpha_target+1)-sets.
std::uint64_t count_violations(const Graph& g, std::size_t alpha_target);

/// Change in count_violations caused by toggling the pair {u, v}.
std::int64_t flip_delta(std::span<const VertexSet> rows, Vertex u, Vertex v, std::size_t alpha_target);

inline constexpr double default_search_temperature = 0.35;

/// Seeded single-edge-flip local search for a K4-free graph on n vertices
/// with α <= alpha_target. A random pair is proposed each step; improving
/// and sideways flips are taken, worsening ones with probability
/// exp(-delta / temperature). The budget is split over 10 restarts from a
/// fresh G(n, 1/2); each keeps its best state, and the best across restarts
/// wins on (violations, graph6). Bit-reproducible for a fixed seed.
SearchResult search_k4_free(std::size_t n, std::size_t alpha_target, std::uint64_t budget, std::uint64_t seed,
                            double temperature = default_search_temperature);

}  // namespace kdiv

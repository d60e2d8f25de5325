#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kdiv/graph.hpp"
#include "kdiv/holes.hpp"

namespace kdiv {

// Exact desk-scale solvers. They double as subroutines of the divider and as
// ground truth in the test suites, so none of them ever approximates: an
// instance beyond a cap is refused with CapExceeded.

struct OracleCaps {
  std::size_t perfect = 20;
  std::size_t perfectly_divisible = 10;
  std::size_t k_divisible = 8;
  std::size_t chromatic = 64;
};

struct CliqueResult {
  std::size_t size = 0;
  VertexSet witness;
};

/// Maximum clique by branch and bound with a greedy-colouring bound.
CliqueResult max_clique(const Graph& g);
/// Maximum clique of g[within].
CliqueResult max_clique(const Graph& g, const VertexSet& within);
inline std::size_t clique_number(const Graph& g, const VertexSet& within) {
  return max_clique(g, within).size;
}

/// α(g) = ω(complement(g)); the witness is an independent set of g.
CliqueResult max_independent_set(const Graph& g);

struct ColoringResult {
  std::size_t chi = 0;
  std::vector<std::size_t> colors;
};

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors);

/// max(ω, ceil(n / α)); 0 for the empty graph.
std::size_t chi_lower_bounds(const Graph& g);

/// Exact χ: iterative deepening from chi_lower_bounds, each depth a DSATUR
/// backtracking search with the maximum clique pre-coloured.
ColoringResult chromatic_number(const Graph& g, std::size_t cap = OracleCaps{}.chromatic);

struct PerfectResult {
  bool perfect = true;
  /// Induced odd hole (or odd antihole, see `antihole`) when imperfect.
  std::optional<HoleWitness> witness;
  bool antihole = false;
};

/// Decides perfection by searching for an odd hole of length >= 5 in g or in
/// its complement.
PerfectResult is_perfect(const Graph& g, std::size_t cap = OracleCaps{}.perfect);

struct PerfectDivResult {
  bool divisible = false;
  /// Top-level split of V(g): g[a] perfect, ω(g[b]) < ω(g). Set when divisible
  /// and g has an edge.
  std::optional<VertexSet> a;
  std::optional<VertexSet> b;
  /// Induced subgraph with an edge admitting no split, when not divisible.
  std::optional<VertexSet> failing;
  /// split_by_subset[mask] = bitmask of a valid A for g[mask], for every mask
  /// whose induced subgraph has an edge and admits a split.
  std::vector<std::optional<std::uint32_t>> split_by_subset;
};

/// Brute force over every induced subgraph and every (A, B) split, with ω and
/// perfection memoised per vertex subset. Among valid splits the reported one
/// minimises |B|, then takes A lexicographically smallest.
PerfectDivResult is_perfectly_divisible(const Graph& g,
                                        std::size_t cap = OracleCaps{}.perfectly_divisible);

struct KDivResult {
  bool divisible = false;
  /// Part label per vertex of g when divisible.
  std::vector<std::size_t> partition;
  /// First (by size, then bitmask) induced subgraph with no valid partition.
  std::optional<VertexSet> failing;
};

/// Exact check of k-divisibility. Requires an edge and k >= 2.
KDivResult is_k_divisible(const Graph& g, std::size_t k, std::size_t cap = OracleCaps{}.k_divisible);

}  // namespace kdiv

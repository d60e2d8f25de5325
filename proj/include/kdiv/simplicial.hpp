#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kdiv/graph.hpp"

namespace kdiv {

/// A vertex together with k pairwise-disjoint cliques whose union is its
/// neighbourhood. Empty cliques are kept, so cover.size() == k always.
struct SimplicialWitness {
  Vertex vertex = no_vertex;
  std::vector<VertexSet> cover;
};

/// steps[i] is removed i-th; its witness is valid in the graph induced by
/// the vertices not removed before it. Labels are those of the full graph.
struct EliminationOrder {
  std::size_t k = 0;
  std::vector<SimplicialWitness> steps;
};

/// Partition of s into exactly k cliques of g (trailing ones possibly
/// empty), or nullopt. Cliques are listed by their minimum vertex, so the
/// lowest vertex of s lands in the first one. k = 2 goes through a
/// bipartiteness test of the complement of g[s]; k >= 3 backtracks.
std::optional<std::vector<VertexSet>> clique_cover_of_set(const Graph& g, const VertexSet& s,
                                                          std::size_t k);

/// Lowest-index k-simplicial vertex of g[alive], with its witness.
std::optional<SimplicialWitness> find_k_simplicial(const Graph& g, const VertexSet& alive, std::size_t k);
inline std::optional<SimplicialWitness> find_k_simplicial(const Graph& g, std::size_t k) {
  return find_k_simplicial(g, g.vertices(), k);
}

struct EliminationResult {
  std::optional<EliminationOrder> order;
  /// Vertices still present when no k-simplicial vertex was left (empty on success).
  VertexSet residual;

  explicit operator bool() const { return order.has_value(); }
};

/// Greedy k-simplicial elimination: repeatedly removes the lowest-index
/// k-simplicial vertex of what remains. A failure is final, since the set of
/// removable vertices only grows as vertices disappear.
EliminationResult elimination_order(const Graph& g, std::size_t k);

/// Re-checks a witness against g[alive] without reusing the search code:
/// exact arity k, pairwise disjointness, union equal to N(v) ∩ alive, and
/// every part a clique.
bool is_valid_witness(const Graph& g, const VertexSet& alive, const SimplicialWitness& w, std::size_t k);

/// Every vertex exactly once and every step's witness valid at its removal.
bool is_valid_elimination_order(const Graph& g, const EliminationOrder& order);

}  // namespace kdiv

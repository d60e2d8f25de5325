#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "kdiv/vertex_set.hpp"

namespace kdiv {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable once built: use Graph::from_edge_list or GraphBuilder.
/// Adjacency is symmetric and irreflexive by construction.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Duplicate pairs collapse. Throws std::invalid_argument on loops or
  /// endpoints >= n.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::span<const VertexSet> rows() const { return adj_; }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  explicit Graph(std::vector<VertexSet> adj);

  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : adj_(n, VertexSet(n)) {}

  std::size_t order() const { return adj_.size(); }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  Graph build() const { return Graph(adj_); }

 private:
  void check(Vertex u, Vertex v) const;

  std::vector<VertexSet> adj_;
};

/// u ~ v in the result iff u != v and u, v are non-adjacent in g.
Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// new index -> original vertex (ascending).
  std::vector<Vertex> original;
  /// original vertex -> new index, or no_vertex when outside the subset.
  std::vector<Vertex> index_of;
};

/// Relabels members of s to 0..|s|-1 in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

VertexSet neighborhood(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

/// Lifts a set over the vertices of an induced subgraph back to the parent graph.
VertexSet lift(const InducedSubgraph& sub, const VertexSet& s, std::size_t parent_order);

}  // namespace kdiv

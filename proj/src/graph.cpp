#include "kdiv/graph.hpp"

#include <stdexcept>
#include <string>

namespace kdiv {

Graph::Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

Graph::Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {
  std::size_t degree_sum = 0;
  for (const auto& row : adj_) degree_sum += row.size();
  edges_ = degree_sum / 2;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder builder(n);
  for (auto [u, v] : edges) builder.add_edge(u, v);
  return builder.build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = adj_[u].next(u + 1); v != no_vertex; v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= order() || v >= order())
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") has an endpoint outside 0.." +
                                std::to_string(order() == 0 ? 0 : order() - 1));
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  adj_[u].insert(v);
  adj_[v].insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  adj_[u].erase(v);
  adj_[v].erase(u);
  return *this;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  const VertexSet all = g.vertices();
  for (Vertex v = 0; v < n; ++v) {
    VertexSet row = all - g.neighbors(v);
    row.erase(v);
    rows.push_back(std::move(row));
  }
  GraphBuilder builder(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : rows[u])
      if (u < v) builder.add_edge(u, v);
  return builder.build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (v >= g.order())
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside the graph");
  if (s.universe() > g.order() && s.next(g.order()) != no_vertex)
    throw std::invalid_argument("subset has members outside the graph");

  InducedSubgraph out;
  out.original = s.to_vector();
  out.index_of.assign(g.order(), no_vertex);
  for (Vertex i = 0; i < out.original.size(); ++i) out.index_of[out.original[i]] = i;

  GraphBuilder builder(out.original.size());
  for (Vertex i = 0; i < out.original.size(); ++i) {
    const auto& row = g.neighbors(out.original[i]);
    for (Vertex j = i + 1; j < out.original.size(); ++j)
      if (row.contains(out.original[j])) builder.add_edge(i, j);
  }
  out.graph = builder.build();
  return out;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  if (v >= g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " outside the graph");
  return g.neighbors(v);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen(g.order());
  VertexSet frontier(g.order(), {0});
  while (!frontier.empty()) {
    seen |= frontier;
    VertexSet next(g.order());
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
  }
  return seen.size() == g.order();
}

VertexSet lift(const InducedSubgraph& sub, const VertexSet& s, std::size_t parent_order) {
  VertexSet out(parent_order);
  for (Vertex v : s) out.insert(sub.original[v]);
  return out;
}

}  // namespace kdiv

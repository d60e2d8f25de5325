#include "kdiv/simplicial.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdiv {
namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

// Nonempty parts ordered by minimum vertex, padded with empty sets to k.
std::vector<VertexSet> normalise(std::vector<VertexSet> parts, std::size_t k, std::size_t universe) {
  std::erase_if(parts, [](const VertexSet& p) { return p.empty(); });
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  parts.resize(k, VertexSet(universe));
  return parts;
}

// Two cliques covering s <=> the complement of g[s] is bipartite. Each
// complement component is 2-coloured from its lowest vertex, which goes to
// the first clique.
std::optional<std::vector<VertexSet>> two_clique_cover(const Graph& g, const VertexSet& s) {
  const std::size_t n = g.order();
  VertexSet first(n);
  VertexSet second(n);
  VertexSet unvisited = s;
  while (!unvisited.empty()) {
    const Vertex root = unvisited.first();
    unvisited.erase(root);
    first.insert(root);
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const bool in_first = first.contains(v);
      VertexSet non_neighbours = s - g.neighbors(v);
      non_neighbours.erase(v);
      // Non-neighbours of v must sit in the other clique.
      if (non_neighbours.intersects(in_first ? first : second)) return std::nullopt;
      for (Vertex u : non_neighbours & unvisited) {
        (in_first ? second : first).insert(u);
        unvisited.erase(u);
        queue.push_back(u);
      }
    }
  }
  return std::vector<VertexSet>{first, second};
}

class CliqueCoverSearch {
 public:
  CliqueCoverSearch(const Graph& g, const VertexSet& s, std::size_t k) : g_(g), k_(k) {
    members_ = s.to_vector();
    std::vector<std::size_t> inner_degree(g.order(), 0);
    std::size_t max_degree = 0;
    for (Vertex v : members_) {
      inner_degree[v] = (g.neighbors(v) & s).size();
      max_degree = std::max(max_degree, inner_degree[v]);
    }
    std::stable_sort(members_.begin(), members_.end(),
                     [&](Vertex a, Vertex b) { return inner_degree[a] > inner_degree[b]; });
    part_capacity_ = max_degree + 1;
  }

  std::optional<std::vector<VertexSet>> run() {
    parts_.clear();
    if (!place(0)) return std::nullopt;
    return parts_;
  }

 private:
  bool place(std::size_t i) {
    if (i == members_.size()) return true;
    // Every clique in g[s] has at most max-degree + 1 vertices.
    std::size_t room = (k_ - parts_.size()) * part_capacity_;
    for (const auto& p : parts_) room += part_capacity_ - p.size();
    if (members_.size() - i > room) return false;

    const Vertex v = members_[i];
    // Indexed: deeper calls may grow parts_.
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      if (!parts_[p].is_subset_of(g_.neighbors(v))) continue;
      parts_[p].insert(v);
      if (place(i + 1)) return true;
      parts_[p].erase(v);
    }
    if (parts_.size() < k_) {
      parts_.emplace_back(g_.order(), std::initializer_list<Vertex>{v});
      if (place(i + 1)) return true;
      parts_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<Vertex> members_;
  std::size_t part_capacity_ = 1;
  std::vector<VertexSet> parts_;
};

}  // namespace

std::optional<std::vector<VertexSet>> clique_cover_of_set(const Graph& g, const VertexSet& s, std::size_t k) {
  if (k == 0) throw std::invalid_argument("clique_cover_of_set: k must be at least 1");
  std::optional<std::vector<VertexSet>> parts;
  if (k == 1) {
    if (is_clique(g, s)) parts = std::vector<VertexSet>{s};
  } else if (k == 2) {
    parts = two_clique_cover(g, s);
  } else {
    parts = CliqueCoverSearch(g, s, k).run();
  }
  if (!parts) return std::nullopt;
  return normalise(std::move(*parts), k, g.order());
}

std::optional<SimplicialWitness> find_k_simplicial(const Graph& g, const VertexSet& alive, std::size_t k) {
  for (Vertex v : alive) {
    if (auto cover = clique_cover_of_set(g, g.neighbors(v) & alive, k))
      return SimplicialWitness{v, std::move(*cover)};
  }
  return std::nullopt;
}

EliminationResult elimination_order(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("elimination_order: k must be at least 1");
  EliminationOrder order{k, {}};
  order.steps.reserve(g.order());
  VertexSet alive = g.vertices();
  while (!alive.empty()) {
    auto witness = find_k_simplicial(g, alive, k);
    if (!witness) return {std::nullopt, alive};
    alive.erase(witness->vertex);
    order.steps.push_back(std::move(*witness));
  }
  return {std::move(order), alive};
}

bool is_valid_witness(const Graph& g, const VertexSet& alive, const SimplicialWitness& w, std::size_t k) {
  if (w.vertex >= g.order() || !alive.contains(w.vertex) || w.cover.size() != k) return false;
  VertexSet seen(g.order());
  for (const auto& part : w.cover) {
    if (part.universe() != g.order()) return false;
    for (Vertex a : part) {
      if (seen.contains(a)) return false;
      seen.insert(a);
      for (Vertex b : part)
        if (a != b && !g.adjacent(a, b)) return false;
    }
  }
  return seen == (g.neighbors(w.vertex) & alive);
}

bool is_valid_elimination_order(const Graph& g, const EliminationOrder& order) {
  if (order.steps.size() != g.order()) return false;
  VertexSet alive = g.vertices();
  for (const auto& step : order.steps) {
    if (!is_valid_witness(g, alive, step, order.k)) return false;
    alive.erase(step.vertex);
  }
  return alive.empty();
}

}  // namespace kdiv

#include "kdiv/oracles.hpp"

namespace kdiv {
namespace {

// Tomita-style search: candidates are greedily coloured, then branched on in
// reverse colour order; a colour class count bounds the clique still reachable.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  CliqueResult run(const VertexSet& within) {
    current_.clear();
    best_.clear();
    if (!within.empty()) expand(within);
    return {best_.size(), VertexSet::from_range(g_.order(), best_)};
  }

 private:
  void expand(VertexSet candidates) {
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    order.reserve(candidates.size());
    bound.reserve(candidates.size());
    {
      VertexSet uncoloured = candidates;
      std::size_t colour = 0;
      while (!uncoloured.empty()) {
        ++colour;
        VertexSet available = uncoloured;
        for (Vertex v = available.first(); v != no_vertex; v = available.next(v + 1)) {
          available -= g_.neighbors(v);
          uncoloured.erase(v);
          order.push_back(v);
          bound.push_back(colour);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.push_back(v);
      const VertexSet next = candidates & g_.neighbors(v);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      candidates.erase(v);
    }
  }

  const Graph& g_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

CliqueResult max_clique(const Graph& g, const VertexSet& within) { return CliqueSearch(g).run(within); }

CliqueResult max_clique(const Graph& g) { return max_clique(g, g.vertices()); }

CliqueResult max_independent_set(const Graph& g) { return max_clique(complement(g)); }

}  // namespace kdiv

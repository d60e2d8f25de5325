#include "kdiv/holes.hpp"

#include <algorithm>

namespace kdiv {
namespace {

struct HoleSearch {
  const Graph& g;
  std::size_t& max_length;
  const std::function<bool(std::span<const Vertex>)>& visit;
  std::vector<Vertex> path;
  VertexSet allowed;   // vertices > start
  VertexSet on_path;
  VertexSet interior;  // path[1 .. size-2]
  bool stopped = false;

  // path = start, p1, ..., last. Extends by one vertex w; if w is adjacent to
  // the start it can only close the cycle.
  void extend() {
    const Vertex start = path.front();
    const Vertex last = path.back();
    const VertexSet candidates = (g.neighbors(last) & allowed) - on_path;
    for (Vertex w : candidates) {
      if (stopped) return;
      if (g.neighbors(w).intersects(interior)) continue;
      if (g.adjacent(w, start)) {
        const std::size_t length = path.size() + 1;
        if (path.size() >= 3 && w > path[1] && length <= max_length) {
          path.push_back(w);
          if (!visit(path)) stopped = true;
          path.pop_back();
        }
        continue;
      }
      // Closing needs at least one more vertex after w.
      if (path.size() + 2 > max_length) continue;
      if (path.size() >= 2) interior.insert(last);
      path.push_back(w);
      on_path.insert(w);
      extend();
      on_path.erase(w);
      path.pop_back();
      if (path.size() >= 2) interior.erase(last);
    }
  }
};

}  // namespace

void for_each_hole(const Graph& g, std::size_t& max_length,
                   const std::function<bool(std::span<const Vertex>)>& visit) {
  const std::size_t n = g.order();
  HoleSearch search{g, max_length, visit, {}, VertexSet(n), VertexSet(n), VertexSet(n)};
  for (Vertex start = 0; start + 3 < n && !search.stopped; ++start) {
    search.allowed = VertexSet(n);
    for (Vertex v = start + 1; v < n; ++v) search.allowed.insert(v);
    for (Vertex first : g.neighbors(start) & search.allowed) {
      if (search.stopped || max_length < 4) break;
      search.path = {start, first};
      search.on_path = VertexSet(n, {start, first});
      search.interior = VertexSet(n);
      search.extend();
    }
  }
}

bool is_hole(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t len = cycle.size();
  if (len < 4) return false;
  for (Vertex v : cycle)
    if (v >= g.order()) return false;
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace kdiv

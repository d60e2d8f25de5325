#include <algorithm>

#include "kdiv/errors.hpp"
#include "kdiv/oracles.hpp"

namespace kdiv {
namespace {

constexpr std::size_t uncoloured = static_cast<std::size_t>(-1);

// DSATUR state: colour per vertex and, per vertex, how many neighbours hold
// each colour.
class Dsatur {
 public:
  Dsatur(const Graph& g, std::size_t palette)
      : g_(g), palette_(palette), colours_(g.order(), uncoloured),
        seen_(g.order(), std::vector<std::size_t>(palette, 0)), saturation_(g.order(), 0) {}

  void assign(Vertex v, std::size_t c) {
    colours_[v] = c;
    for (Vertex u : g_.neighbors(v))
      if (seen_[u][c]++ == 0) ++saturation_[u];
  }
  void unassign(Vertex v) {
    const std::size_t c = colours_[v];
    colours_[v] = uncoloured;
    for (Vertex u : g_.neighbors(v))
      if (--seen_[u][c] == 0) --saturation_[u];
  }

  /// Highest saturation among uncoloured vertices; ties to the lowest index.
  Vertex pick() const {
    Vertex best = no_vertex;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colours_[v] != uncoloured) continue;
      if (best == no_vertex || saturation_[v] > saturation_[best]) best = v;
    }
    return best;
  }

  bool blocked(Vertex v, std::size_t c) const { return seen_[v][c] != 0; }

  /// Backtracking completion within the palette. New colours are opened in
  /// increasing order only, which removes palette permutations.
  bool complete(std::size_t coloured, std::size_t used) {
    if (coloured == g_.order()) return true;
    const Vertex v = pick();
    if (saturation_[v] >= palette_) return false;
    const std::size_t limit = std::min(palette_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (blocked(v, c)) continue;
      assign(v, c);
      if (complete(coloured + 1, std::max(used, c + 1))) return true;
      unassign(v);
    }
    return false;
  }

  const std::vector<std::size_t>& colours() const { return colours_; }

 private:
  const Graph& g_;
  std::size_t palette_;
  std::vector<std::size_t> colours_;
  std::vector<std::vector<std::size_t>> seen_;
  std::vector<std::size_t> saturation_;
};

std::vector<std::size_t> greedy_dsatur(const Graph& g) {
  Dsatur state(g, g.order());
  for (std::size_t step = 0; step < g.order(); ++step) {
    const Vertex v = state.pick();
    std::size_t c = 0;
    while (state.blocked(v, c)) ++c;
    state.assign(v, c);
  }
  return state.colours();
}

std::size_t colours_used(const std::vector<std::size_t>& colours) {
  std::size_t used = 0;
  for (std::size_t c : colours) used = std::max(used, c + 1);
  return used;
}

}  // namespace

bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

std::size_t chi_lower_bounds(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  const std::size_t omega = max_clique(g).size;
  const std::size_t alpha = max_independent_set(g).size;
  return std::max(omega, (n + alpha - 1) / alpha);
}

ColoringResult chromatic_number(const Graph& g, std::size_t cap) {
  check_cap("chromatic_number", g.order(), cap);
  if (g.order() == 0) return {0, {}};

  auto upper = greedy_dsatur(g);
  const std::size_t upper_chi = colours_used(upper);
  const std::size_t lower = chi_lower_bounds(g);
  if (lower == upper_chi) return {upper_chi, std::move(upper)};

  const auto clique = max_clique(g).witness.to_vector();
  for (std::size_t palette = lower; palette < upper_chi; ++palette) {
    Dsatur state(g, palette);
    std::size_t c = 0;
    for (Vertex v : clique) state.assign(v, c++);
    if (state.complete(clique.size(), clique.size())) return {palette, state.colours()};
  }
  return {upper_chi, std::move(upper)};
}

}  // namespace kdiv

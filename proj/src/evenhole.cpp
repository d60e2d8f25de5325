#include "kdiv/evenhole.hpp"

#include "kdiv/errors.hpp"

namespace kdiv {

std::optional<HoleWitness> shortest_even_hole(const Graph& g, std::size_t cap) {
  check_cap("shortest_even_hole", g.order(), cap);
  std::optional<HoleWitness> best;
  // Holes arrive in lexicographic order, so the first of each length wins;
  // afterwards only strictly shorter even holes are of interest.
  std::size_t limit = g.order();
  for_each_hole(g, limit, [&](std::span<const Vertex> cycle) {
    if (cycle.size() % 2 != 0) return true;
    best = HoleWitness{{cycle.begin(), cycle.end()}};
    if (cycle.size() == 4) return false;
    limit = cycle.size() - 1;
    return true;
  });
  return best;
}

}  // namespace kdiv

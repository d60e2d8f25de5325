#include "kdiv/errors.hpp"
#include "kdiv/oracles.hpp"

namespace kdiv {
namespace {

std::optional<HoleWitness> find_odd_hole(const Graph& g) {
  std::optional<HoleWitness> found;
  for_each_hole(g, [&](std::span<const Vertex> cycle) {
    if (cycle.size() % 2 == 0) return true;
    found = HoleWitness{{cycle.begin(), cycle.end()}};
    return false;
  });
  return found;
}

}  // namespace

PerfectResult is_perfect(const Graph& g, std::size_t cap) {
  check_cap("is_perfect", g.order(), cap);
  if (auto hole = find_odd_hole(g)) return {false, std::move(hole), false};
  if (auto anti = find_odd_hole(complement(g))) return {false, std::move(anti), true};
  return {};
}

}  // namespace kdiv

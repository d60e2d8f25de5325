#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "kdiv/graph.hpp"

namespace kdiv {

/// A chordless cycle of length >= 4, in canonical form: it starts at its
/// minimum vertex and proceeds towards the smaller of that vertex's two
/// cycle neighbours.
struct HoleWitness {
  std::vector<Vertex> cycle;

  std::size_t length() const { return cycle.size(); }
  friend bool operator==(const HoleWitness&, const HoleWitness&) = default;
};

/// Enumerates every hole of g exactly once, in lexicographic order of the
/// canonical vertex sequence. `visit` returns false to stop early.
///
/// `max_length` bounds the cycles reported; the callback may lower it while
/// the search runs (it is re-read at every extension).
void for_each_hole(const Graph& g, std::size_t& max_length,
                   const std::function<bool(std::span<const Vertex>)>& visit);

inline void for_each_hole(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit) {
  std::size_t unbounded = g.order();
  for_each_hole(g, unbounded, visit);
}

/// True iff `cycle` lists >= 4 distinct vertices forming an induced cycle in
/// the given cyclic order. Independent of the enumerator.
bool is_hole(const Graph& g, std::span<const Vertex> cycle);

}  // namespace kdiv

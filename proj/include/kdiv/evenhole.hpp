#pragma once

#include <cstddef>
#include <optional>

#include "kdiv/graph.hpp"
#include "kdiv/holes.hpp"

namespace kdiv {

inline constexpr std::size_t default_even_hole_cap = 18;

/// A shortest even hole; among those of minimum length, the
/// lexicographically smallest canonical cycle. Exponential enumeration,
/// refused above `cap` vertices.
std::optional<HoleWitness> shortest_even_hole(const Graph& g, std::size_t cap = default_even_hole_cap);

inline bool is_even_hole_free(const Graph& g, std::size_t cap = default_even_hole_cap) {
  return !shortest_even_hole(g, cap).has_value();
}

}  // namespace kdiv

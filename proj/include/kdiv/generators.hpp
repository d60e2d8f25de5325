#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "kdiv/graph.hpp"

namespace kdiv::gen {

Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph path(std::size_t n);
/// Cycle 0-1-...-(n-1)-0; requires n >= 3.
Graph cycle(std::size_t n);
Graph petersen();
/// Paley graph on the prime field F_q, q ≡ 1 (mod 4): x ~ y iff x - y is a
/// nonzero square.
Graph paley(std::size_t q);
/// Rook's graph K_m □ K_m; vertex (r, c) is r * m + c.
Graph rook(std::size_t m);

/// G(n, p) over an mt19937_64 stream; each pair (i < j) draws once in
/// lexicographic order, so a seed pins the graph on every platform.
Graph random(std::size_t n, double p, std::mt19937_64& rng);

/// The labeled graph on n vertices whose upper-triangle adjacency bits,
/// in graph6 column order, are the low bits of `code`.
Graph from_code(std::size_t n, std::uint64_t code);

}  // namespace kdiv::gen

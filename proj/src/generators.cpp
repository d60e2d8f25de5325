#include "kdiv/generators.hpp"

#include <stdexcept>
#include <vector>

namespace kdiv::gen {

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph empty(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return b.build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    b.add_edge(i, i + 5);                // spokes
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return b.build();
}

Graph paley(std::size_t q) {
  if (q < 5 || q % 4 != 1) throw std::invalid_argument("paley: q must be ≡ 1 (mod 4)");
  for (std::size_t d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("paley: q must be prime");
  std::vector<bool> square(q, false);
  for (std::size_t x = 1; x < q; ++x) square[x * x % q] = true;
  GraphBuilder b(q);
  for (Vertex u = 0; u < q; ++u)
    for (Vertex v = u + 1; v < q; ++v)
      if (square[(v - u) % q]) b.add_edge(u, v);
  return b.build();
}

Graph rook(std::size_t m) {
  GraphBuilder b(m * m);
  for (Vertex u = 0; u < m * m; ++u)
    for (Vertex v = u + 1; v < m * m; ++v)
      if (u / m == v / m || u % m == v % m) b.add_edge(u, v);
  return b.build();
}

Graph random(std::size_t n, double p, std::mt19937_64& rng) {
  GraphBuilder b(n);
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      // 53-bit uniform in [0, 1) without relying on distribution internals.
      if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) b.add_edge(i, j);
  return b.build();
}

Graph from_code(std::size_t n, std::uint64_t code) {
  GraphBuilder b(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((code >> bit) & 1U) b.add_edge(i, j);
  return b.build();
}

}  // namespace kdiv::gen

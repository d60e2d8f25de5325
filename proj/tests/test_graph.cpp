#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kdiv/generators.hpp"
#include "kdiv/graph.hpp"

using namespace kdiv;

namespace {

void check_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    CHECK_FALSE(g.adjacent(v, v));
    degree_sum += g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      CHECK(u < g.order());
      CHECK(g.adjacent(u, v));
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("from_edge_list builds exactly the listed edges") {
  const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(k2.order() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.adjacent(0, 1));

  const Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5 == gen::cycle(5));
  CHECK(c5.edge_count() == 5);
  check_well_formed(c5);

  const Graph dup = Graph::from_edge_list(4, {{0, 1}, {0, 1}, {1, 0}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.degree(2) == 0);
  CHECK(dup.degree(3) == 0);
}

TEST_CASE("from_edge_list rejects loops and out-of-range endpoints") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(gen::complete(4)) == gen::empty(4));

  const Graph c5 = gen::cycle(5);
  CHECK(complement(complement(c5)) == c5);
  CHECK(complement(c5) == Graph::from_edge_list(5, {{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = gen::random(1 + i % 70, 0.4, rng);
    const Graph c = complement(g);
    check_well_formed(c);
    CHECK(c.edge_count() + g.edge_count() == g.order() * (g.order() - 1) / 2);
    CHECK(complement(c) == g);
  }
}

TEST_CASE("induced_subgraph relabels in order") {
  const Graph c5 = gen::cycle(5);
  const auto p4 = induced_subgraph(c5, VertexSet(5, {0, 1, 2, 3}));
  CHECK(p4.graph == gen::path(4));
  CHECK(p4.original == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(p4.index_of[4] == no_vertex);

  const auto whole = induced_subgraph(c5, c5.vertices());
  CHECK(whole.graph == c5);
  CHECK(whole.graph.edge_count() == c5.edge_count());

  const auto k2 = induced_subgraph(gen::complete(5), VertexSet(5, {1, 3}));
  CHECK(k2.graph == gen::complete(2));
  CHECK(k2.original == std::vector<Vertex>{1, 3});
  CHECK(k2.index_of[3] == 1);

  CHECK_THROWS_AS(induced_subgraph(c5, VertexSet(8, {6})), std::invalid_argument);
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(gen::cycle(5), 0) == VertexSet(5, {1, 4}));
  CHECK(neighborhood(gen::complete(4), 2) == VertexSet(4, {0, 1, 3}));
  CHECK(neighborhood(gen::empty(3), 1).empty());
  CHECK_THROWS_AS(neighborhood(gen::empty(3), 3), std::invalid_argument);
}

TEST_CASE("constructors keep the degree-sum identity") {
  check_well_formed(gen::petersen());
  check_well_formed(gen::paley(17));
  check_well_formed(gen::rook(3));
  check_well_formed(gen::complete(70));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Graph g = gen::random(2 + i * 3, 0.3, rng);
    check_well_formed(g);
    check_well_formed(induced_subgraph(g, VertexSet::from_range(g.order(), std::vector<Vertex>{0, 1})).graph);
  }
}

TEST_CASE("fixtures") {
  const Graph paley = gen::paley(17);
  for (Vertex v = 0; v < 17; ++v) CHECK(paley.degree(v) == 8);
  CHECK(gen::petersen().edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(gen::petersen().degree(v) == 3);
  CHECK(gen::rook(3).edge_count() == 18);
  CHECK_THROWS_AS(gen::paley(15), std::invalid_argument);
  CHECK_THROWS_AS(gen::paley(7), std::invalid_argument);
}

TEST_CASE("vertex sets beyond one word") {
  VertexSet s(130, {0, 63, 64, 129});
  CHECK(s.size() == 4);
  CHECK(s.to_vector() == std::vector<Vertex>{0, 63, 64, 129});
  CHECK(s.next(65) == 129);
  const VertexSet full = VertexSet::full(130);
  CHECK(full.size() == 130);
  CHECK((full - s).size() == 126);
  CHECK((full & s) == s);
  CHECK(is_connected(gen::cycle(100)));
  CHECK_FALSE(is_connected(gen::empty(2)));
}

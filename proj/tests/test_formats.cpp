#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "kdiv/errors.hpp"
#include "kdiv/formats.hpp"
#include "kdiv/generators.hpp"

using namespace kdiv;

TEST_CASE("graph6 known strings round-trip") {
  for (const char* text : {"D?{", "DUW", "?", "@", "A_", "A?", "Bw", "I?h]@eOWG"}) {
    CAPTURE(text);
    CHECK(encode_graph6(parse_graph6(text)) == text);
  }
  const Graph d = parse_graph6("D?{");
  CHECK(d.order() == 5);
  // "?{" = 000000 111100: bits for (0,4) (1,4) (2,4) (3,4).
  CHECK(d == Graph::from_edge_list(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  CHECK(parse_graph6("DUW").order() == 5);
  CHECK(parse_graph6("Bw") == gen::complete(3));
}

TEST_CASE("graph6 C5 encodes and decodes to the same labelled graph") {
  const Graph c5 = gen::cycle(5);
  CHECK(parse_graph6(encode_graph6(c5)) == c5);
  CHECK(encode_graph6(c5) == "Dhc");
}

TEST_CASE("graph6 tolerates header and trailing newline") {
  CHECK(parse_graph6(">>graph6<<Dhc\n") == gen::cycle(5));
  CHECK(parse_graph6("Dhc\r\n") == gen::cycle(5));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);     // truncated
  CHECK_THROWS_AS(parse_graph6("D?{?"), ParseError);   // trailing byte
  CHECK_THROWS_AS(parse_graph6("D? {"), ParseError);   // byte 32
  CHECK_THROWS_AS(parse_graph6("A\x7f"), ParseError);  // byte 127
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);     // padding bit set
  CHECK_THROWS_AS(parse_graph6("~?"), ParseError);     // truncated long header
  CHECK_THROWS_AS(parse_graph6("~??B"), ParseError);   // n = 3 in long form
}

TEST_CASE("graph6 long header") {
  const Graph big = gen::cycle(100);
  const std::string text = encode_graph6(big);
  CHECK(text.substr(0, 4) == "~?@c");
  CHECK(parse_graph6(text) == big);
  CHECK(text.size() == 4 + (100 * 99 / 2 + 5) / 6);
}

TEST_CASE("graph6 parse∘encode and encode∘parse are identities for every labelled graph on n <= 6") {
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 6; ++n) {
    const std::uint64_t codes = std::uint64_t{1} << (n * (n - (n > 0)) / 2);
    for (std::uint64_t code = 0; code < codes; ++code) {
      const Graph g = gen::from_code(n, code);
      const std::string text = encode_graph6(g);
      const Graph back = parse_graph6(text);
      REQUIRE(back == g);
      REQUIRE(encode_graph6(back) == text);
      ++checked;
    }
  }
  CHECK(checked == 1 + 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("graph6 round trip on 1000 random graphs with n <= 32") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng() % 33;
    const double p = static_cast<double>(rng() % 101) / 100.0;
    const Graph g = gen::random(n, p, rng);
    const std::string text = encode_graph6(g);
    REQUIRE(parse_graph6(text) == g);
    REQUIRE(encode_graph6(parse_graph6(text)) == text);
  }
}

TEST_CASE("dimacs is 1-indexed at the boundary") {
  std::istringstream in("c a comment\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  const Graph g = parse_dimacs(in);
  CHECK(g == gen::cycle(5));
  CHECK(encode_dimacs(g) == "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");

  std::istringstream again(encode_dimacs(gen::petersen()));
  CHECK(parse_dimacs(again) == gen::petersen());

  std::istringstream zero("p edge 3 1\ne 0 1\n");
  CHECK_THROWS_AS(parse_dimacs(zero), ParseError);
  std::istringstream no_header("e 1 2\n");
  CHECK_THROWS_AS(parse_dimacs(no_header), ParseError);
  std::istringstream loop("p edge 3 1\ne 2 2\n");
  CHECK_THROWS_AS(parse_dimacs(loop), ParseError);
  std::istringstream junk("p edge 3 1\nx 1 2\n");
  CHECK_THROWS_AS(parse_dimacs(junk), ParseError);
}

TEST_CASE("edge list") {
  std::istringstream in("4\n0 1\n1 2\n# note\n2 3\n");
  const Graph g = parse_edge_list(in);
  CHECK(g == gen::path(4));
  CHECK(encode_edge_list(g) == "4\n0 1\n1 2\n2 3\n");

  std::istringstream bad("3\n0 3\n");
  CHECK_THROWS_AS(parse_edge_list(bad), ParseError);
  std::istringstream empty("");
  CHECK_THROWS_AS(parse_edge_list(empty), ParseError);
  std::istringstream word("3\n0 x\n");
  CHECK_THROWS_AS(parse_edge_list(word), ParseError);
}

TEST_CASE("read_graphs streams graph6 lines") {
  std::istringstream in("Dhc\n\nBw\n");
  const auto graphs = read_graphs(in, Format::graph6);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0] == gen::cycle(5));
  CHECK(graphs[1] == gen::complete(3));

  std::istringstream broken("Dhc\nD?\n");
  CHECK_THROWS_WITH_AS(read_graphs(broken, Format::graph6), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_format_name("sparse6"), ParseError);
}

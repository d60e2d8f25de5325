#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kdiv/graph.hpp"

namespace kdiv {

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Throws ParseError on a malformed header, a
/// truncated or over-long bit stream, nonzero padding bits, or bytes outside
/// 63..126.
Graph parse_graph6(std::string_view line);

/// Canonical graph6: no header, no newline, padding bits cleared.
std::string encode_graph6(const Graph& g);

/// DIMACS .col: "c" comments, one "p edge n m" line, "e u v" lines (1-indexed).
Graph parse_dimacs(std::istream& in);
std::string encode_dimacs(const Graph& g);

/// Plain edge list: vertex count on the first line, then "u v" per line (0-indexed).
Graph parse_edge_list(std::istream& in);
std::string encode_edge_list(const Graph& g);

enum class Format { graph6, dimacs, edges };

Format parse_format_name(std::string_view name);

/// Reads every graph in a stream. graph6 yields one graph per non-blank
/// line; the other formats hold exactly one graph.
std::vector<Graph> read_graphs(std::istream& in, Format format);

}  // namespace kdiv

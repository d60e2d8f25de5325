#include "kdiv/formats.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "kdiv/errors.hpp"

namespace kdiv {
namespace {

constexpr int g6_bias = 63;
constexpr std::string_view g6_header = ">>graph6<<";

int g6_value(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126)
    throw ParseError("graph6: byte " + std::to_string(v) + " outside 63..126");
  return v - g6_bias;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_size(std::string_view token, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(std::string(what) + ": expected a non-negative integer, got '" +
                     std::string(token) + "'");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.substr(0, g6_header.size()) == g6_header) line.remove_prefix(g6_header.size());
  if (line.empty()) throw ParseError("graph6: empty line");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(g6_value(line[0]));
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(g6_value(line[i]));
    if (n < 63) throw ParseError("graph6: non-canonical size header");
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(g6_value(line[i]));
    if (n <= 258047) throw ParseError("graph6: non-canonical size header");
    pos = 8;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos < bytes) throw ParseError("graph6: truncated bit stream");
  if (line.size() - pos > bytes) throw ParseError("graph6: trailing data after bit stream");

  GraphBuilder builder(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int value = g6_value(line[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) builder.add_edge(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    const int value = g6_value(line[pos + k / 6]);
    if ((value >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
  }
  // Validate bytes even when there are no bits to read (n <= 1).
  for (std::size_t i = pos; i < line.size(); ++i) g6_value(line[i]);
  return builder.build();
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + g6_bias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + g6_bias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + g6_bias));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + g6_bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + g6_bias));
  return out;
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    const std::string where = "dimacs line " + std::to_string(line_no);
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(where + ": duplicate problem line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col"))
        throw ParseError(where + ": expected 'p edge <n> <m>'");
      n = to_size(tokens[2], where.c_str());
      to_size(tokens[3], where.c_str());
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) throw ParseError(where + ": edge before problem line");
      if (tokens.size() != 3) throw ParseError(where + ": expected 'e <u> <v>'");
      const std::size_t u = to_size(tokens[1], where.c_str());
      const std::size_t v = to_size(tokens[2], where.c_str());
      if (u == 0 || v == 0 || u > n || v > n)
        throw ParseError(where + ": endpoint outside 1.." + std::to_string(n));
      if (u == v) throw ParseError(where + ": loop");
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(where + ": unknown record '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw ParseError("dimacs: missing problem line");
  return Graph::from_edge_list(n, edges);
}

std::string encode_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    const std::string where = "edge list line " + std::to_string(line_no);
    if (!have_n) {
      if (tokens.size() != 1) throw ParseError(where + ": expected the vertex count");
      n = to_size(tokens[0], where.c_str());
      have_n = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(where + ": expected 'u v'");
    const std::size_t u = to_size(tokens[0], where.c_str());
    const std::size_t v = to_size(tokens[1], where.c_str());
    if (u >= n || v >= n) throw ParseError(where + ": endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(where + ": loop");
    edges.emplace_back(u, v);
  }
  if (!have_n) throw ParseError("edge list: missing vertex count");
  return Graph::from_edge_list(n, edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Format parse_format_name(std::string_view name) {
  if (name == "g6" || name == "graph6") return Format::graph6;
  if (name == "dimacs" || name == "col") return Format::dimacs;
  if (name == "edges" || name == "edgelist") return Format::edges;
  throw ParseError("unknown format '" + std::string(name) + "' (expected g6, dimacs or edges)");
}

std::vector<Graph> read_graphs(std::istream& in, Format format) {
  switch (format) {
    case Format::dimacs:
      return {parse_dimacs(in)};
    case Format::edges:
      return {parse_edge_list(in)};
    case Format::graph6:
      break;
  }
  std::vector<Graph> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace kdiv

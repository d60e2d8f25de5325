#include "kdiv/divider.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "kdiv/formats.hpp"
#include "kdiv/oracles.hpp"

namespace kdiv {
namespace {

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (Vertex v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// New label per old label: nonempty parts by minimum vertex, then empty ones.
std::vector<std::size_t> canonical_labels(const std::vector<VertexSet>& parts) {
  std::vector<std::size_t> by_position(parts.size());
  std::iota(by_position.begin(), by_position.end(), 0);
  std::stable_sort(by_position.begin(), by_position.end(), [&](std::size_t a, std::size_t b) {
    return parts[a].first() < parts[b].first();  // empty sets report no_vertex
  });
  std::vector<std::size_t> relabel(parts.size());
  for (std::size_t pos = 0; pos < by_position.size(); ++pos) relabel[by_position[pos]] = pos;
  return relabel;
}

}  // namespace

VertexSet Division::part(std::size_t label) const {
  VertexSet out(parts.size());
  for (Vertex v = 0; v < parts.size(); ++v)
    if (parts[v] == label) out.insert(v);
  return out;
}

DivideOutcome divide(const Graph& g, std::size_t k, const EliminationOrder& order, DivideOptions options) {
  if (g.edge_count() == 0) throw std::invalid_argument("divide: graph has no edge");
  if (k == 0 || order.k != k) throw std::invalid_argument("divide: order was built for a different k");
  if (!is_valid_elimination_order(g, order))
    throw std::invalid_argument("divide: not a valid k-simplicial elimination order for this graph");

  const std::size_t n = g.order();
  const std::size_t part_count = k + 1;
  std::vector<VertexSet> parts(part_count, VertexSet(n));
  std::vector<std::size_t> label(n, 0);
  VertexSet present(n);
  std::size_t omega = 0;
  DivisionTrace trace;
  trace.reserve(n);

  for (auto it = order.steps.rbegin(); it != order.steps.rend(); ++it) {
    const Vertex v = it->vertex;
    const VertexSet nbrs = g.neighbors(v) & present;
    // ω(G) ∈ {ω(G - v), ω(G - v) + 1}; it grows iff N(v) holds an ω-clique.
    const bool grew = clique_number(g, nbrs) == omega;
    const std::size_t w = grew ? omega + 1 : omega;

    TraceStep step{v, grew ? Branch::grow : Branch::stay, {}, 0, w};
    if (w >= 3 && grew) {
      step.chosen = 0;
    } else if (w >= 2) {
      // Also used for the first edge: an edgeless G - v has no valid
      // partition to inherit, but every part is edgeless there.
      step.bad.resize(part_count);
      for (std::size_t i = 0; i < part_count; ++i) step.bad[i] = clique_number(g, parts[i] & nbrs) >= w - 1;
      const auto good = std::find(step.bad.begin(), step.bad.end(), false);
      if (good == step.bad.end()) {
        trace.push_back(step);
        throw TheoremViolation("all " + std::to_string(part_count) + " parts are bad at vertex " +
                                   std::to_string(v),
                               std::move(trace));
      }
      step.chosen = static_cast<std::size_t>(good - step.bad.begin());
    }

    parts[step.chosen].insert(v);
    label[v] = step.chosen;
    present.insert(v);
    omega = w;
    trace.push_back(std::move(step));

    if (options.check_trace && clique_number(g, present) != omega)
      throw TheoremViolation("incremental clique number diverged at vertex " + std::to_string(v), std::move(trace));
    if (omega >= 2) {
      for (std::size_t i = 0; i < part_count; ++i)
        if (clique_number(g, parts[i]) >= omega)
          throw TheoremViolation("part " + std::to_string(i) + " holds a maximum clique after inserting vertex " +
                                     std::to_string(v),
                                 std::move(trace));
    }
  }

  const auto relabel = canonical_labels(parts);
  DivideOutcome out;
  out.division.k = k;
  out.division.omega = omega;
  out.division.parts.resize(n);
  for (Vertex v = 0; v < n; ++v) out.division.parts[v] = relabel[label[v]];
  out.division.per_part_clique.assign(part_count, 0);
  for (std::size_t i = 0; i < part_count; ++i) out.division.per_part_clique[relabel[i]] = clique_number(g, parts[i]);

  for (auto& step : trace) {
    step.chosen = relabel[step.chosen];
    if (!step.bad.empty()) {
      std::vector<bool> bad(part_count);
      for (std::size_t i = 0; i < part_count; ++i) bad[relabel[i]] = step.bad[i];
      step.bad = std::move(bad);
    }
  }
  out.trace = std::move(trace);
  return out;
}

DivisionCheck verify_division(const Graph& g, const Division& d) {
  const std::size_t n = g.order();
  if (d.parts.size() != n)
    return {false, "division labels " + std::to_string(d.parts.size()) + " vertices, graph has " + std::to_string(n)};
  if (d.per_part_clique.size() != d.part_count())
    return {false, "per_part_clique has " + std::to_string(d.per_part_clique.size()) + " entries, expected " +
                       std::to_string(d.part_count())};
  for (Vertex v = 0; v < n; ++v)
    if (d.parts[v] >= d.part_count())
      return {false, "vertex " + std::to_string(v) + " has part label " + std::to_string(d.parts[v]) + " >= " +
                         std::to_string(d.part_count())};

  const std::size_t omega = max_clique(g).size;
  if (omega != d.omega)
    return {false, "reported omega " + std::to_string(d.omega) + ", actual " + std::to_string(omega)};

  for (std::size_t i = 0; i < d.part_count(); ++i) {
    const auto clique = max_clique(g, d.part(i));
    if (clique.size != d.per_part_clique[i])
      return {false, "part " + std::to_string(i) + " reported clique number " + std::to_string(d.per_part_clique[i]) +
                         ", actual " + std::to_string(clique.size)};
    if (g.edge_count() > 0 && clique.size >= omega)
      return {false, "part " + std::to_string(i) + " holds a " + std::to_string(clique.size) + "-clique " +
                         describe(clique.witness)};
  }
  return {true, {}};
}

std::size_t division_color_bound(std::size_t k, std::size_t omega) {
  std::size_t bound = 1;
  for (std::size_t e = 1; e < omega; ++e) {
    if (bound > std::numeric_limits<std::size_t>::max() / (k + 1)) return std::numeric_limits<std::size_t>::max();
    bound *= k + 1;
  }
  return bound;
}

namespace {

// Colours g[subset] with colours offset, offset+1, ...; returns how many.
std::size_t color_into(const Graph& g, std::size_t k, const VertexSet& subset, std::vector<std::size_t>& colors,
                       std::size_t offset) {
  if (subset.empty()) return 0;
  const auto sub = induced_subgraph(g, subset);
  if (sub.graph.edge_count() == 0) {
    for (Vertex v : subset) colors[v] = offset;
    return 1;
  }
  auto derived = elimination_order(sub.graph, k);
  if (!derived) {
    const VertexSet stuck = lift(sub, derived.residual, g.order());
    throw OrderNotFound("no " + std::to_string(k) + "-simplicial elimination order for part " + describe(subset) +
                            "; stuck on " + describe(stuck),
                        stuck, encode_graph6(induced_subgraph(g, stuck).graph));
  }
  const auto outcome = divide(sub.graph, k, *derived.order);
  std::size_t next = offset;
  for (std::size_t label = 0; label < outcome.division.part_count(); ++label) {
    const VertexSet part = lift(sub, outcome.division.part(label), g.order());
    next += color_into(g, k, part, colors, next);
  }
  return next - offset;
}

}  // namespace

DivisionColoring color_by_division(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("color_by_division: k must be at least 1");
  DivisionColoring out;
  out.omega = max_clique(g).size;
  out.bound = division_color_bound(k, out.omega);
  out.colors.assign(g.order(), 0);
  out.colors_used = color_into(g, k, g.vertices(), out.colors, 0);
  return out;
}

nlohmann::ordered_json division_certificate(const Graph& g, const DivideOutcome& outcome) {
  nlohmann::ordered_json cert;
  cert["n"] = g.order();
  cert["k"] = outcome.division.k;
  cert["omega"] = outcome.division.omega;
  cert["parts"] = outcome.division.parts;
  cert["per_part_clique"] = outcome.division.per_part_clique;
  auto trace = nlohmann::ordered_json::array();
  for (const auto& step : outcome.trace) {
    nlohmann::ordered_json entry;
    entry["v"] = step.v;
    entry["branch"] = step.branch == Branch::grow ? "grow" : "stay";
    entry["bad"] = step.bad;
    entry["chosen"] = step.chosen;
    trace.push_back(std::move(entry));
  }
  cert["trace"] = std::move(trace);
  return cert;
}

}  // namespace kdiv

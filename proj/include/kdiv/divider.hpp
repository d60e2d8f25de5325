#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kdiv/errors.hpp"
#include "kdiv/graph.hpp"
#include "kdiv/simplicial.hpp"

namespace kdiv {

/// Partition of V(G) into k+1 labelled parts (some possibly empty) such that
/// no part contains a maximum clique of G.
struct Division {
  std::size_t k = 0;
  /// Part label in [0, k] per vertex.
  std::vector<std::size_t> parts;
  std::size_t omega = 0;
  /// Clique number of each part, indexed by label.
  std::vector<std::size_t> per_part_clique;

  std::size_t part_count() const { return k + 1; }
  VertexSet part(std::size_t label) const;
};

enum class Branch { grow, stay };

/// One insertion of the reverse elimination sweep.
struct TraceStep {
  Vertex v = no_vertex;
  Branch branch = Branch::stay;
  /// Per part, whether X_i ∩ N(v) held an (ω-1)-clique. Empty when the
  /// badness test was not needed (ω grew past 2, or the graph is edgeless).
  std::vector<bool> bad;
  std::size_t chosen = 0;
  /// ω of the graph after the insertion.
  std::size_t omega = 0;
};

using DivisionTrace = std::vector<TraceStep>;

struct DivideOutcome {
  Division division;
  DivisionTrace trace;
};

struct DivideOptions {
  /// Recompute ω from scratch after every insertion and compare it with the
  /// incremental value.
  bool check_trace = false;
};

/// Raised when the sweep finds every part bad or a part holding a maximum
/// clique. The construction rules this out for valid orders, so it signals a
/// bug; the trace up to the failure is attached.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, DivisionTrace trace)
      : Error("theorem violation: " + what), trace_(std::move(trace)) {}
  const DivisionTrace& trace() const { return trace_; }

 private:
  DivisionTrace trace_;
};

/// No k-simplicial elimination order exists for some graph the caller needed
/// one for. `residual` is the stuck vertex set in the labels of the graph
/// handed to the caller.
class OrderNotFound : public Error {
 public:
  OrderNotFound(const std::string& what, VertexSet residual, std::string residual_graph6)
      : Error(what), residual_(std::move(residual)), residual_graph6_(std::move(residual_graph6)) {}
  const VertexSet& residual() const { return residual_; }
  const std::string& residual_graph6() const { return residual_graph6_; }

 private:
  VertexSet residual_;
  std::string residual_graph6_;
};

/// Builds a (k+1)-division by inserting vertices in reverse elimination
/// order, keeping ω of the growing graph up to date.
///
/// When ω grows to w >= 3, the previous parts hold no (w-1)-clique and v goes
/// to part 0. When ω stays w >= 2 (or first reaches 2), v goes to the
/// lowest-index part X_i such that X_i ∩ N(v) has no (w-1)-clique; N(v) is
/// covered by k cliques of size <= w-1, so at most k parts are bad. While the
/// graph is edgeless everything goes to part 0.
///
/// Final part labels are canonical: nonempty parts ordered by their minimum
/// vertex, empty parts last. Trace indices use the final labels.
///
/// Throws std::invalid_argument for an edgeless graph or an order that does
/// not validate against g with the given k.
DivideOutcome divide(const Graph& g, std::size_t k, const EliminationOrder& order, DivideOptions options = {});

struct DivisionCheck {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Independent audit: partition shape, ω and every per-part clique number
/// recomputed with the exact clique oracle, and each part strictly below ω
/// when g has an edge.
DivisionCheck verify_division(const Graph& g, const Division& d);

struct DivisionColoring {
  std::size_t colors_used = 0;
  std::vector<std::size_t> colors;
  std::size_t omega = 0;
  /// (k+1)^(ω-1), saturating.
  std::size_t bound = 0;
};

/// Colours g by dividing it, colouring every nonempty part recursively (each
/// has smaller clique number) and giving the parts disjoint palettes. Each
/// part gets a freshly derived elimination order. Throws OrderNotFound,
/// naming the part, if one does not exist.
DivisionColoring color_by_division(const Graph& g, std::size_t k);

/// (k+1)^(ω-1) with saturation; 1 when ω <= 1.
std::size_t division_color_bound(std::size_t k, std::size_t omega);

/// {"n","k","omega","parts","per_part_clique","trace"} in that order.
nlohmann::ordered_json division_certificate(const Graph& g, const DivideOutcome& outcome);

}  // namespace kdiv

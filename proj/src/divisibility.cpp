#include <algorithm>
#include <bit>
#include <stdexcept>

#include "kdiv/errors.hpp"
#include "kdiv/oracles.hpp"

namespace kdiv {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = static_cast<Mask>(g.neighbors(v).low_word());
  return adj;
}

// ω of every induced subgraph: ω(S) = max(ω(S - v), 1 + ω(S ∩ N(v))) for the
// lowest v in S. Both operands are numerically smaller masks.
std::vector<std::uint8_t> clique_table(const std::vector<Mask>& adj) {
  const Mask count = Mask{1} << adj.size();
  std::vector<std::uint8_t> omega(count, 0);
  for (Mask s = 1; s < count; ++s) {
    const auto v = static_cast<std::size_t>(std::countr_zero(s));
    const Mask rest = s & (s - 1);
    omega[s] = std::max<std::uint8_t>(omega[rest], static_cast<std::uint8_t>(1 + omega[rest & adj[v]]));
  }
  return omega;
}

// g[s] is an induced cycle: every vertex has exactly two neighbours in s and
// g[s] is connected.
bool induces_cycle(const std::vector<Mask>& adj, Mask s, bool complemented) {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    const Mask nbrs = (complemented ? ~adj[v] & ~(Mask{1} << v) : adj[v]) & s;
    if (std::popcount(nbrs) != 2) return false;
  }
  Mask seen = s & (~s + 1);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      next |= (complemented ? ~adj[v] & ~(Mask{1} << v) : adj[v]) & s;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

// Perfection of every induced subgraph. A minimal imperfect graph is an odd
// hole or an odd antihole, so S is perfect iff every S - v is perfect and S
// itself is neither.
std::vector<bool> perfect_table(const std::vector<Mask>& adj) {
  const Mask count = Mask{1} << adj.size();
  std::vector<bool> perfect(count, true);
  for (Mask s = 1; s < count; ++s) {
    bool ok = true;
    for (Mask rest = s; rest != 0 && ok; rest &= rest - 1) ok = perfect[s & ~(rest & (~rest + 1))];
    const int size = std::popcount(s);
    if (ok && size >= 5 && size % 2 == 1)
      ok = !induces_cycle(adj, s, false) && !induces_cycle(adj, s, true);
    perfect[s] = ok;
  }
  return perfect;
}

VertexSet to_set(std::size_t n, Mask m) { return VertexSet::from_low_word(n, m); }

// Smaller (|B|, then A lexicographically smallest as a sorted vertex list).
bool better_split(Mask s, Mask a, Mask best_a) {
  const int b_size = std::popcount(s & ~a);
  const int best_b_size = std::popcount(s & ~best_a);
  if (b_size != best_b_size) return b_size < best_b_size;
  const Mask diff = a ^ best_a;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

bool failing_before(Mask a, Mask b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

PerfectDivResult is_perfectly_divisible(const Graph& g, std::size_t cap) {
  check_cap("is_perfectly_divisible", g.order(), std::min<std::size_t>(cap, 20));
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  const auto omega = clique_table(adj);
  const auto perfect = perfect_table(adj);
  const Mask count = Mask{1} << n;

  PerfectDivResult result;
  result.split_by_subset.assign(count, std::nullopt);
  std::optional<Mask> failing;
  for (Mask s = 1; s < count; ++s) {
    if (omega[s] < 2) continue;
    std::optional<Mask> best;
    // Enumerates every submask A of s, including s and 0.
    for (Mask a = s;; a = (a - 1) & s) {
      if (perfect[a] && omega[s & ~a] < omega[s] && (!best || better_split(s, a, *best))) best = a;
      if (a == 0) break;
    }
    if (best) {
      result.split_by_subset[s] = *best;
    } else if (!failing || failing_before(s, *failing)) {
      failing = s;
    }
  }

  const Mask full = count - 1;
  result.divisible = !failing;
  if (failing) {
    result.failing = to_set(n, *failing);
  } else if (auto split = result.split_by_subset[full]) {
    result.a = to_set(n, *split);
    result.b = to_set(n, full & ~*split);
  }
  return result;
}

namespace {

class KPartitionSearch {
 public:
  KPartitionSearch(const std::vector<Mask>& adj, const std::vector<std::uint8_t>& omega, std::size_t k)
      : adj_(adj), omega_(omega), k_(k), parts_(k, 0) {}

  /// A labeling of s into k parts, none with clique number ω(g[s]).
  std::optional<std::vector<std::size_t>> find(Mask s) {
    members_.clear();
    for (Mask rest = s; rest != 0; rest &= rest - 1)
      members_.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    target_ = omega_[s];
    std::fill(parts_.begin(), parts_.end(), 0);
    labels_.assign(adj_.size(), 0);
    if (!place(0, 0)) return std::nullopt;
    return labels_;
  }

 private:
  bool place(std::size_t i, std::size_t used) {
    if (i == members_.size()) return true;
    const std::size_t v = members_[i];
    // Labels beyond the first unused one are symmetric to it.
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t p = 0; p < limit; ++p) {
      const Mask grown = parts_[p] | (Mask{1} << v);
      if (omega_[grown] >= target_) continue;
      const Mask saved = parts_[p];
      parts_[p] = grown;
      labels_[v] = p;
      if (place(i + 1, std::max(used, p + 1))) return true;
      parts_[p] = saved;
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  const std::vector<std::uint8_t>& omega_;
  std::size_t k_;
  std::vector<Mask> parts_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> labels_;
  std::uint8_t target_ = 0;
};

}  // namespace

KDivResult is_k_divisible(const Graph& g, std::size_t k, std::size_t cap) {
  if (k < 2) throw std::invalid_argument("is_k_divisible: k must be at least 2");
  if (g.edge_count() == 0) throw std::invalid_argument("is_k_divisible: graph has no edge");
  check_cap("is_k_divisible", g.order(), std::min<std::size_t>(cap, 20));
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  const auto omega = clique_table(adj);
  const Mask count = Mask{1} << n;

  KPartitionSearch search(adj, omega, k);
  KDivResult result;
  std::optional<Mask> failing;
  for (Mask s = 1; s < count; ++s) {
    if (omega[s] < 2) continue;
    if (failing && !failing_before(s, *failing)) continue;
    if (!search.find(s)) failing = s;
  }
  result.divisible = !failing;
  if (failing) {
    result.failing = to_set(n, *failing);
  } else {
    result.partition = *search.find(count - 1);
  }
  return result;
}

}  // namespace kdiv

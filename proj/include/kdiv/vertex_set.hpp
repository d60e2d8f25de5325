#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace kdiv {

using Vertex = std::size_t;

inline constexpr Vertex no_vertex = std::numeric_limits<Vertex>::max();

/// A subset of {0, ..., universe-1} stored as a bitset.
///
/// Universes of up to 64 vertices live in a single inline word, so the
/// intersection-heavy exact solvers never touch the heap on desk-scale
/// graphs. Larger universes spill into additional words transparently.
class VertexSet {
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;
  using Storage = boost::container::small_vector<Word, 1>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return at_ == other.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = no_vertex;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1U) != 0;
  }
  void insert(Vertex v) {
    assert(v < universe_);
    words_[v / word_bits] |= Word{1} << (v % word_bits);
  }
  void erase(Vertex v) {
    assert(v < universe_);
    words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
  }

  std::size_t size() const {
    std::size_t count = 0;
    for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member >= from, or no_vertex.
  Vertex next(Vertex from) const {
    if (from >= universe_) return no_vertex;
    std::size_t wi = from / word_bits;
    Word w = words_[wi] & (~Word{0} << (from % word_bits));
    while (true) {
      if (w != 0) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return no_vertex;
      w = words_[wi];
    }
  }
  Vertex first() const { return next(0); }

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, no_vertex}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  bool is_subset_of(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& other) {
    assert(universe_ == other.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Low 64 bits; exact when universe <= 64. Used as a memo key by the brute-force oracles.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  static VertexSet from_low_word(std::size_t universe, std::uint64_t bits) {
    assert(universe <= word_bits);
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = bits;
    s.trim();
    return s;
  }

 private:
  void trim() {
    if (universe_ % word_bits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % word_bits)) - 1;
  }

  std::size_t universe_ = 0;
  Storage words_;
};

}  // namespace kdiv

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "kforce/error.hpp"

namespace kforce {

/// Set of vertex ids over a fixed universe {0, ..., universe-1}, stored as a
/// bitset. All set algebra used by the propagation engine and the solvers goes
/// through this type; members are always in range and never duplicated.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) {
    if (universe < 0) throw PreconditionError("vertex set universe must be non-negative");
    universe_ = universe;
    words_.assign((universe + 63) / 64, 0);
  }

  static VertexSet all(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> ids) {
    VertexSet s(universe);
    for (int v : ids) s.insert(v);
    return s;
  }

  static VertexSet from(int universe, const std::vector<int>& ids) {
    VertexSet s(universe);
    for (int v : ids) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  void insert(int v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  bool operator==(const VertexSet& o) const = default;

  VertexSet& operator|=(const VertexSet& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& o) {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& o) const {
    match(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  /// |this \ o|, but stops counting once the count exceeds `limit` and returns
  /// limit + 1. Hot path of the propagation rule.
  int count_without(const VertexSet& o, int limit) const {
    match(o);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += std::popcount(words_[i] & ~o.words_[i]);
      if (c > limit) return limit + 1;
    }
    return c;
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
    }
    return -1;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t bits = words_[i];
      while (bits) {
        f(int(i * 64) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(std::size_t(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= universe_) {
      throw InvalidVertexError("vertex id " + std::to_string(v) + " out of range [0, " +
                               std::to_string(universe_) + ")");
    }
  }

  void match(const VertexSet& o) const {
    if (universe_ != o.universe_) {
      throw PreconditionError("vertex sets over different universes (" + std::to_string(universe_) +
                              " vs " + std::to_string(o.universe_) + ")");
    }
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace kforce

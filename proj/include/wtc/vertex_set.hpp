#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "wtc/error.hpp"

namespace wtc {

using VertexId = std::size_t;

// Subset of {0, ..., universe-1}, stored as a packed bitset.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    const_iterator() = default;
    const_iterator(const VertexSet* set, VertexId pos) : set_(set), pos_(pos) { advance_to_member(); }

    VertexId operator*() const { return pos_; }
    const_iterator& operator++() {
      ++pos_;
      advance_to_member();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    void advance_to_member() {
      const auto n = set_->universe_;
      while (pos_ < n) {
        const auto word = set_->words_[pos_ / 64] >> (pos_ % 64);
        if (word != 0) {
          pos_ += static_cast<VertexId>(std::countr_zero(word));
          return;
        }
        pos_ = (pos_ / 64 + 1) * 64;
      }
      pos_ = n;
    }

    const VertexSet* set_ = nullptr;
    VertexId pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : VertexSet(universe) {
    for (auto v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<VertexId>(v));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool is_full() const noexcept { return count() == universe_; }

  bool contains(VertexId v) const noexcept {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
  }
  void insert(VertexId v) {
    check(v);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  void erase(VertexId v) {
    check(v);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool is_subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Lexicographic order on sorted member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
      if (*ia != *ib) return *ia < *ib;
    return ia == a.end() && ib != b.end();
  }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, universe_); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

  // Space-separated sorted ids, e.g. "0 1 3".
  std::string to_string() const {
    std::string out;
    for (auto v : *this) {
      if (!out.empty()) out += ' ';
      out += std::to_string(v);
    }
    return out;
  }

 private:
  void check(VertexId v) const {
    if (v >= universe_)
      throw error(errc::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_)
      throw error(errc::invalid_argument, "vertex sets over different universes");
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace wtc

#pragma once

/**
 * Fixed-width vertex set over the labels 0..127, packed into two 64-bit
 * words. Every graph in this library has at most kMaxVertices vertices, so a
 * VertexSet is a plain value: cheap to copy, hash and compare.
 */

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "msc/errors.hpp"

namespace msc {

inline constexpr int kMaxVertices = 128;

class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWords = 2;
  static constexpr int kBitsPerWord = 64;

  constexpr VertexSet() = default;

  VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  static VertexSet from_range(std::span<const int> members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    VertexSet s;
    for (int w = 0; w < kWords; ++w) {
      int bits = n - w * kBitsPerWord;
      if (bits >= kBitsPerWord)
        s.words_[w] = ~Word{0};
      else if (bits > 0)
        s.words_[w] = (Word{1} << bits) - 1;
    }
    return s;
  }

  static constexpr VertexSet from_words(Word low, Word high = 0) {
    VertexSet s;
    s.words_ = {low, high};
    return s;
  }

  constexpr Word word(int i) const { return words_[i]; }

  void insert(int v) {
    check(v);
    words_[v / kBitsPerWord] |= Word{1} << (v % kBitsPerWord);
  }

  void erase(int v) {
    check(v);
    words_[v / kBitsPerWord] &= ~(Word{1} << (v % kBitsPerWord));
  }

  constexpr bool contains(int v) const {
    if (v < 0 || v >= kMaxVertices) return false;
    return (words_[v / kBitsPerWord] >> (v % kBitsPerWord)) & 1U;
  }

  constexpr int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }

  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  /// Lowest member, or -1 when empty.
  constexpr int first() const {
    if (words_[0]) return std::countr_zero(words_[0]);
    if (words_[1]) return kBitsPerWord + std::countr_zero(words_[1]);
    return -1;
  }

  /// Highest member, or -1 when empty.
  constexpr int last() const {
    if (words_[1]) return 2 * kBitsPerWord - 1 - std::countl_zero(words_[1]);
    if (words_[0]) return kBitsPerWord - 1 - std::countl_zero(words_[0]);
    return -1;
  }

  constexpr bool intersects(const VertexSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }

  constexpr bool is_subset_of(const VertexSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  constexpr VertexSet& operator|=(const VertexSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr VertexSet& operator&=(const VertexSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }

  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on the sorted member sequences.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    VertexSet x = a, y = b;
    while (!x.empty() && !y.empty()) {
      int fx = x.first(), fy = y.first();
      if (fx != fy) return fx <=> fy;
      x.erase(fx);
      y.erase(fy);
    }
    return y.empty() ? (x.empty() ? std::strong_ordering::equal : std::strong_ordering::greater)
                     : std::strong_ordering::less;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    explicit iterator(const std::array<Word, kWords>& words) : rest_(words) {}

    int operator*() const {
      return rest_[0] ? std::countr_zero(rest_[0]) : kBitsPerWord + std::countr_zero(rest_[1]);
    }
    iterator& operator++() {
      Word& w = rest_[0] ? rest_[0] : rest_[1];
      w &= w - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.rest_ == b.rest_; }

   private:
    std::array<Word, kWords> rest_{};
  };

  iterator begin() const { return iterator(words_); }
  iterator end() const { return iterator(); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  /// "{0,2,5}"
  std::string to_string() const {
    std::string out = "{";
    bool sep = false;
    for (int v : *this) {
      if (sep) out += ',';
      out += std::to_string(v);
      sep = true;
    }
    return out + "}";
  }

 private:
  static void check(int v) {
    if (v < 0 || v >= kMaxVertices)
      throw InvalidArgument("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(kMaxVertices - 1));
  }

  std::array<Word, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::uint64_t h = s.word(0) * 0x9E3779B97F4A7C15ULL;
    h ^= (s.word(1) + 0x632BE59BD9B4E019ULL) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

}  // namespace msc

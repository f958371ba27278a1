#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace polycut {

using Vertex = int;

// Fixed-capacity membership bitset over vertex indices, W 64-bit words wide.
// VertexSet covers every vertex a PlanarGraph can hold (n <= 255); the one-word
// SmallVertexSet is the fast path used by the search kernels when n <= 64.
template <std::size_t W>
class BasicVertexSet {
 public:
  static constexpr int kCapacity = static_cast<int>(64 * W);

  constexpr BasicVertexSet() = default;
  constexpr BasicVertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) set(v);
  }

  // {0, ..., n-1}
  static constexpr BasicVertexSet range(int n) {
    BasicVertexSet s;
    for (std::size_t i = 0; i < W && n > 0; ++i, n -= 64)
      s.words_[i] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return s;
  }

  static constexpr BasicVertexSet single(Vertex v) {
    BasicVertexSet s;
    s.set(v);
    return s;
  }

  constexpr void set(Vertex v) { words_[v >> 6] |= bit(v); }
  constexpr void reset(Vertex v) { words_[v >> 6] &= ~bit(v); }
  constexpr bool test(Vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }
  constexpr bool contains(Vertex v) const { return test(v); }

  constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  constexpr bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  constexpr bool any() const { return !empty(); }

  // Lowest member, or -1 when empty.
  constexpr Vertex first() const {
    for (std::size_t i = 0; i < W; ++i)
      if (words_[i]) return static_cast<Vertex>(64 * i) + std::countr_zero(words_[i]);
    return -1;
  }

  constexpr bool is_subset_of(const BasicVertexSet& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  constexpr bool intersects(const BasicVertexSet& o) const {
    for (std::size_t i = 0; i < W; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < W; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < W; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr BasicVertexSet& operator^=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < W; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // Set difference.
  constexpr BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < W; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend constexpr BasicVertexSet operator^(BasicVertexSet a, const BasicVertexSet& b) { return a ^= b; }
  friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

  // Complement within the full capacity; mask with range(n) where it matters.
  constexpr BasicVertexSet operator~() const {
    BasicVertexSet s;
    for (std::size_t i = 0; i < W; ++i) s.words_[i] = ~words_[i];
    return s;
  }

  friend constexpr bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;

  constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }

  template <std::size_t V>
  constexpr BasicVertexSet<V> resized() const {
    BasicVertexSet<V> s;
    for (std::size_t i = 0; i < V && i < W; ++i) s.set_word(i, words_[i]);
    return s;
  }
  constexpr void set_word(std::size_t i, std::uint64_t w) { words_[i] = w; }

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr iterator(const BasicVertexSet* s, std::size_t word, std::uint64_t rest)
        : s_(s), word_(word), rest_(rest) {
      skip();
    }
    constexpr Vertex operator*() const {
      return static_cast<Vertex>(64 * word_) + std::countr_zero(rest_);
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      skip();
      return *this;
    }
    constexpr iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend constexpr bool operator==(const iterator& a, const iterator& b) {
      return a.word_ == b.word_ && a.rest_ == b.rest_;
    }

   private:
    constexpr void skip() {
      while (rest_ == 0 && word_ + 1 < W) rest_ = s_->words_[++word_];
      if (rest_ == 0) word_ = W;
    }
    const BasicVertexSet* s_ = nullptr;
    std::size_t word_ = W;
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(this, 0, words_[0]); }
  constexpr iterator end() const { return iterator(this, W, 0); }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }
  std::array<std::uint64_t, W> words_{};
};

using VertexSet = BasicVertexSet<4>;
using SmallVertexSet = BasicVertexSet<1>;

}  // namespace polycut

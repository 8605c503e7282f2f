#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace totdom {

/// Fixed-width bitset over vertex labels 0..127, two 64-bit words.
///
/// Small enough to pass by value everywhere; the adjacency rows of a Graph
/// and every VertexSet are built on it.
class Bitset {
 public:
  static constexpr std::size_t kBits = 128;
  static constexpr std::size_t kWords = kBits / 64;

  constexpr Bitset() = default;

  /// Bits 0..n-1 set.
  static constexpr Bitset prefix(std::size_t n) {
    Bitset b;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        b.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        b.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return b;
  }

  static constexpr Bitset single(std::size_t i) {
    Bitset b;
    b.set(i);
    return b;
  }

  constexpr bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  constexpr void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  constexpr std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  constexpr bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  constexpr bool any() const { return !none(); }

  /// Lowest set bit, or kBits when empty.
  constexpr std::size_t first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kBits;
  }

  /// Lowest set bit strictly above i, or kBits.
  constexpr std::size_t next(std::size_t i) const {
    ++i;
    if (i >= kBits) return kBits;
    std::size_t w = i >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
      if (++w == kWords) return kBits;
      cur = words_[w];
    }
  }

  constexpr bool is_subset_of(const Bitset& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  constexpr bool intersects(const Bitset& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  constexpr Bitset& operator|=(const Bitset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr Bitset& operator&=(const Bitset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr Bitset& operator-=(const Bitset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend constexpr Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend constexpr Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend constexpr Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  friend constexpr bool operator==(const Bitset&, const Bitset&) = default;

  /// Orders bitsets by their member lists read as ascending label sequences:
  /// the set holding the smallest element of the symmetric difference is smaller.
  /// Only meaningful as "lexicographic by sorted labels" for sets of equal size.
  friend constexpr bool lex_less(const Bitset& a, const Bitset& b) {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) return (a.words_[w] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  constexpr std::uint64_t word(std::size_t w) const { return words_[w]; }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t cur = words_[w];
      while (cur != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace totdom

template <>
struct std::hash<totdom::Bitset> {
  std::size_t operator()(const totdom::Bitset& b) const noexcept {
    return std::hash<std::uint64_t>{}(b.word(0) * 0x9E3779B97F4A7C15ULL ^ b.word(1));
  }
};

#pragma once

#include <array>
#include <bit>
#include <cstdint>

namespace mpex {

inline constexpr int kMaxVertices = 256;

/// Fixed-capacity bitset over vertex ids 0..kMaxVertices-1.
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  static VertexSet range(int begin, int end) noexcept {
    VertexSet s;
    for (int v = begin; v < end; ++v) s.insert(v);
    return s;
  }

  void insert(int v) noexcept { words_[v >> 6] |= bit(v); }
  void erase(int v) noexcept { words_[v >> 6] &= ~bit(v); }
  bool contains(int v) const noexcept { return (words_[v >> 6] & bit(v)) != 0; }

  bool empty() const noexcept {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  int count() const noexcept {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  /// Smallest member >= from, or -1.
  int next(int from) const noexcept {
    if (from >= kMaxVertices) return -1;
    int wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi == kWords) return -1;
      w = words_[wi];
    }
  }
  int first() const noexcept { return next(0); }

  /// Members strictly greater than v.
  VertexSet above(int v) const noexcept {
    VertexSet s = *this;
    const int wi = v >> 6;
    for (int i = 0; i < wi; ++i) s.words_[i] = 0;
    const int b = v & 63;
    s.words_[wi] &= b == 63 ? 0 : (~std::uint64_t{0} << (b + 1));
    return s;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (int wi = 0; wi < kWords; ++wi) {
      for (std::uint64_t w = words_[wi]; w; w &= w - 1) {
        f((wi << 6) + std::countr_zero(w));
      }
    }
  }

 private:
  static constexpr std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << (v & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace mpex

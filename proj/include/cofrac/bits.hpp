#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace cofrac {

// Fixed-size dynamic bitset used for adjacency rows and candidate sets in the
// enumeration and branch-and-bound code. Word count is fixed at construction.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits all(int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

  int universe() const { return n_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this \ o
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  int intersection_count(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  // Lowest set bit, or -1.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
    return -1;
  }
  // Next set bit strictly after `pos` (pass -1 to start), or -1.
  int next(int pos) const {
    ++pos;
    if (pos >= n_) return -1;
    std::size_t wi = std::size_t(pos) >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t(0) << (pos & 63));
    while (true) {
      if (w) return int(wi) * 64 + std::countr_zero(w);
      if (++wi >= w_.size()) return -1;
      w = w_[wi];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

  bool operator==(const Bits&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace cofrac

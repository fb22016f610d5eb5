#pragma once

#include <cstdint>

#include "cofrac/rational.hpp"

namespace cofrac {

// splitmix64. The fixed mixing constants make every seeded draw sequence
// bit-reproducible across platforms, which the randomized commands rely on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw d in [0, 2^53); the event "d/2^53 < p" has probability
  // exactly max(0, min(1, p)) up to 2^-53 granularity and is evaluated in
  // exact arithmetic, so a given seed yields the same graph everywhere.
  std::uint64_t draw53() { return next() >> 11; }

  bool bernoulli(const Rational& p) {
    static const Integer kTwo53 = Integer(1) << 53;
    return ratio(Integer(draw53()), kTwo53) < p;
  }

  // Unbiased uniform integer in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
      std::uint64_t r = next();
      if (r < limit) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace cofrac

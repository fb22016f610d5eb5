#pragma once

#include <vector>

#include "cofrac/rational.hpp"

namespace cofrac {

// Vertex-indexed nonnegative rational weights: the dual object of the
// covering LPs. Valid as a color labeling when every independent set sums to
// at most one, and as a cocolor labeling when every clique does too.
struct Labeling {
  std::vector<Rational> values;

  Labeling() = default;
  explicit Labeling(int n) : values(n, Rational(0)) {}
  explicit Labeling(std::vector<Rational> v) : values(std::move(v)) {}

  int size() const { return int(values.size()); }
  const Rational& operator[](int v) const { return values[v]; }
  Rational& operator[](int v) { return values[v]; }

  Rational weight() const {
    Rational total(0);
    for (const Rational& x : values) total += x;
    return total;
  }
};

}  // namespace cofrac

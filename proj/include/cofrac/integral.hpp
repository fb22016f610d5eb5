#pragma once

#include "cofrac/graph.hpp"
#include "cofrac/limits.hpp"

namespace cofrac {

// Exact chromatic number by branch and bound over color classes.
int integral_chi(const Graph& g, const Limits& limits = {});

// Exact cochromatic number: fewest parts, each a clique or independent set.
int integral_z(const Graph& g, const Limits& limits = {});

// Colors greedily in largest-degree-first order; an upper bound for the
// chromatic number with no size restriction.
int greedy_coloring_bound(const Graph& g);

}  // namespace cofrac

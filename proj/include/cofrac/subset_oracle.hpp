#pragma once

#include <optional>
#include <vector>

#include "cofrac/bits.hpp"
#include "cofrac/graph.hpp"
#include "cofrac/labeling.hpp"
#include "cofrac/limits.hpp"

namespace cofrac {

enum class SetKind { independent, clique };

// A clique or independent set, as a strictly increasing vertex list.
// Singletons (and the empty set) are canonically independent.
struct VertexSet {
  std::vector<int> members;
  SetKind kind = SetKind::independent;

  bool operator==(const VertexSet& o) const = default;
  // Lexicographic on member lists; kind breaks exact ties.
  bool operator<(const VertexSet& o) const {
    if (members != o.members) return members < o.members;
    return kind < o.kind;
  }
};

bool is_clique(const Graph& g, const std::vector<int>& members);
bool is_independent_set(const Graph& g, const std::vector<int>& members);
// Checks the declared kind's adjacency predicate plus the sorted/range
// invariants.
bool is_valid_set(const Graph& g, const VertexSet& s);

// All inclusion-maximal cliques / independent sets, each sorted, the list in
// lexicographic order. Pivoting Bron-Kerbosch; independent sets enumerate the
// complement's cliques. Throws CapabilityError past limits.enumeration_max_n.
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g,
                                                 const Limits& limits = {});
std::vector<VertexSet> enumerate_maximal_independent_sets(
    const Graph& g, const Limits& limits = {});

struct WeightedSet {
  VertexSet set;
  Rational weight;
};

// Exact maximum-weight independent set / clique under nonnegative rational
// vertex weights; branch-and-bound with a greedy clique-cover bound. Among
// maximum-weight sets the lexicographically smallest member list is returned.
// Throws std::invalid_argument on a negative weight and CapabilityError past
// limits.exact_search_max_n.
WeightedSet max_weight_independent_set(const Graph& g, const Labeling& w,
                                       const Limits& limits = {});
WeightedSet max_weight_clique(const Graph& g, const Labeling& w,
                              const Limits& limits = {});

// Lexicographically first independent set of exactly k vertices inside
// `within`, if one exists.
std::optional<std::vector<int>> find_independent_set_of_size(const Graph& g,
                                                             const Bits& within,
                                                             int k);

}  // namespace cofrac

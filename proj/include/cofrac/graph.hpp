#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cofrac/bits.hpp"
#include "cofrac/limits.hpp"
#include "cofrac/rational.hpp"

namespace cofrac {

// Which generator produced a graph, with its parameters as decimal strings.
struct Provenance {
  std::string family;
  std::vector<std::string> params;
};

// Finite simple graph on dense vertex ids 0..n-1. Immutable after
// construction; all transforms return new graphs. Construction normalizes
// edges to u < v, sorts them, drops duplicates, and rejects self-loops and
// out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges,
        std::optional<Provenance> provenance = std::nullopt,
        bool vertex_transitive = false);

  int n() const { return n_; }
  int m() const { return int(edges_.size()); }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  const Bits& neighbors(int v) const { return adj_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  const std::optional<Provenance>& provenance() const { return provenance_; }
  // True only when a generator known to produce vertex-transitive graphs
  // (complete, cycle, kneser) built this graph; never computed.
  bool vertex_transitive_by_construction() const { return transitive_; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Bits> adj_;
  std::optional<Provenance> provenance_;
  bool transitive_ = false;
};

// Accepts the plain edge-list format ("n m" header then "u v" lines,
// 0-based) and DIMACS .col ("p edge n m" / "e u v" lines, 1-based).
// Duplicate edges collapse; malformed input throws ParseError with the
// offending line number.
Graph parse_graph(std::string_view text);

// Plain edge-list serialization: "n m" header then one "u v" line per edge.
std::string to_edge_list(const Graph& g);

Graph complement(const Graph& g);

// k disjoint copies; copy j occupies ids j*n .. (j+1)*n-1.
Graph disjoint_union(const Graph& g, int k);

Graph gen_complete(int n);
Graph gen_cycle(int n);
Graph gen_path(int n);

// Star K_{1,t} plus s isolated vertices: center 0, leaves 1..t, isolated
// t+1..t+s.
Graph gen_star(int t, int s);

// Kneser graph: vertices are the b-subsets of {1..a} in lexicographic order,
// adjacent when disjoint. Edgeless when a < 2b.
Graph gen_kneser(int a, int b);

// Mycielskian: vertices V (ids 0..n-1), shadows V' (ids n..2n-1), apex 2n;
// shadow v+n is adjacent to N(v), the apex to every shadow.
Graph gen_mycielski(const Graph& g);

// G(n,p): each pair present independently with probability p, decided by a
// splitmix64 stream in (u,v) lexicographic order, u < v.
Graph gen_random(int n, const Rational& p, std::uint64_t seed);

// Subgraph induced by `keep` (strictly increasing ids), relabeled to
// 0..|keep|-1 in the same order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

struct GraphStats {
  int alpha = 0;
  int omega = 0;
  bool triangle_free = true;
  int m = 0;
};

// Exact alpha/omega by branch-and-bound; throws CapabilityError past
// limits.exact_search_max_n.
GraphStats stats(const Graph& g, const Limits& limits = {});

}  // namespace cofrac

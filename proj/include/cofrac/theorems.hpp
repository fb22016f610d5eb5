#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cofrac/graph.hpp"
#include "cofrac/limits.hpp"
#include "cofrac/rational.hpp"
#include "cofrac/solver.hpp"

namespace cofrac {

// `fails` marks a genuine counterexample and must abort whatever suite sees
// it; `exception` marks membership in a statement's excluded family;
// `not_applicable` marks unmet preconditions.
enum class Verdict { holds, exception, fails, not_applicable };

struct TheoremReport {
  std::string theorem_id;
  std::optional<Provenance> graph;
  // Named quantities, rationals and integers rendered as decimal strings.
  std::map<std::string, std::string> quantities;
  Verdict verdict = Verdict::holds;
  std::string detail;
};

// Star formulas: Z_f(K_{1,t}) = 2 - 1/t and, with s >= 1 isolated vertices
// added, Z_f = 2 - 1/(t+1).
TheoremReport check_example1(int t, int s, const Limits& limits = {});

// Z_f >= n / max(alpha, omega), with equality required of graphs built by a
// vertex-transitive generator.
TheoremReport check_proposition1(const Graph& g, const Limits& limits = {});

// Z_f(kG) = chi_f(kG) = chi_f(G) whenever k >= omega(G).
TheoremReport check_theorem5(const Graph& g, int k, const Limits& limits = {});

// For triangle-free G, chi_f = Z_f unless the edges form a single star
// (with any number of isolated vertices), where the star formulas apply.
TheoremReport check_theorem6(const Graph& g, const Limits& limits = {});

// chi_f of the Mycielskian equals c + 1/c where c = chi_f(G).
TheoremReport check_mycielski(const Graph& g, const Limits& limits = {});

// chi_f(K_{a:b}) = a/b; for a = 3b-1 and b >= 2 additionally Z_f = 3 - 1/b.
// K_{2:1} = K_2 lands in the star family instead and reports `exception`.
TheoremReport check_kneser(int a, int b, const Limits& limits = {});

struct RamseyConversionTrace {
  int k = 0;  // omega + 1
  int R = 0;  // R(k,k) from the constant table
  std::vector<int> partition_sizes;  // |V_1| .. |V_n|
  std::vector<int> s;                // k-sets extracted per level
  std::vector<int> residues;         // R_0 .. R_n
  Rational input_weight{0};
  Rational output_weight{0};
};

// Rebuilds a cocoloring cover into a pure coloring cover: cliques are
// dropped, their vertices are bucketed by clique-weight level i (weight in
// ((i-1)/n, i/n]), and each level's carried vertices are drained into
// independent k-sets of weight i/n while at least R remain; the final
// R_n < R leftovers become weight-1 singletons. Output weight never exceeds
// input weight + R. Requires omega(G) <= 3 so R(k,k) is known exactly.
std::pair<FractionalCover, RamseyConversionTrace> ramsey_convert(
    const Graph& g, const FractionalCover& cover, const Limits& limits = {});

// Drives the conversion from an optimal cocoloring and checks the bound.
TheoremReport check_theorem7(const Graph& g, const Limits& limits = {});

struct AksSample {
  Graph h;  // random spanning subgraph of the induced clique-heavy part
  CertifiedValue zf_h;
  std::vector<int> v1;  // vertices with clique weight >= 1/2 in the optimum
  bool v1_empty = false;
};

AksSample aks_subgraph_sample(const Graph& g, std::uint64_t seed,
                              const Limits& limits = {});

struct Remark6Report {
  int n = 0;
  std::uint64_t seed = 0;
  int alpha = 0;
  int omega = 0;
  Rational lower{0};  // n / max(alpha, omega)
  Rational zf{0};
  int chi_greedy = 0;
  double reference = 0.0;  // n / (2 log2 n), display only
  bool sandwich_ok = false;
};

Remark6Report remark6_experiment(int n, std::uint64_t seed,
                                 const Limits& limits = {});

struct GapReport {
  int n = 0;
  Rational eps{0};
  std::uint64_t seed = 0;
  Rational p{0};
  int alpha = 0;
  int chi_complement = 0;
  Rational chi_f_value{0};
  Rational z_f_value{0};
  Rational lhs{0};  // n/alpha - chi(complement)
  Rational rhs{0};  // chi_f - z_f
  bool holds = false;
};

GapReport gap_experiment(int n, const Rational& eps, std::uint64_t seed,
                         const Limits& limits = {});

struct NmSearchResult {
  Graph witness;
  Rational best{0};
  int evaluated = 0;
};

// Hill-climbing lower bound on the largest Z_f among n-vertex m-edge
// graphs: a uniform m-edge start, then single edge swaps, keeping
// nondecreasing moves. Never claimed to be the maximum.
NmSearchResult zf_nm_search(int n, long m, int trials, std::uint64_t seed,
                            const Limits& limits = {});

// Seeded triangle-free sampler: visits the vertex pairs in shuffled order,
// including each with probability 1/2 unless it would close a triangle.
Graph sample_triangle_free(int n, std::uint64_t seed);

}  // namespace cofrac

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cofrac/graph.hpp"
#include "cofrac/labeling.hpp"
#include "cofrac/limits.hpp"
#include "cofrac/rational.hpp"
#include "cofrac/subset_oracle.hpp"

namespace cofrac {

enum class CoverMode { coloring, cocoloring };

struct CoverEntry {
  VertexSet set;
  Rational weight;
};

// Weighted family of vertex sets covering every vertex to total weight >= 1.
// Coloring mode admits independent sets only; cocoloring admits both kinds.
struct FractionalCover {
  CoverMode mode = CoverMode::coloring;
  std::vector<CoverEntry> entries;
  Rational total_weight() const;
};

enum class Parameter { chi_f, z_f };
enum class SolveMethod { automatic, enumeration, column_generation };

CoverMode mode_for(Parameter p);

struct SolveStats {
  SolveMethod method_used = SolveMethod::enumeration;
  long lp_pivots = 0;
  int lp_columns = 0;
  int pricing_rounds = 0;
  std::int64_t elapsed_ms = 0;
};

// Optimal value together with matching primal and dual certificates.
// The cover achieves the value; the labeling proves nothing cheaper exists.
struct CertifiedValue {
  Parameter parameter = Parameter::chi_f;
  Rational value{0};
  FractionalCover cover;
  Labeling dual{0};
  SolveStats stats;
};

CertifiedValue chi_f(const Graph& g, SolveMethod method = SolveMethod::automatic,
                     const Limits& limits = {});
CertifiedValue z_f(const Graph& g, SolveMethod method = SolveMethod::automatic,
                   const Limits& limits = {});

struct VerifyResult {
  bool ok = true;
  std::string detail;
};

// Feasibility of the cover alone: set validity per mode, positive weights,
// unit coverage of every vertex. Re-checks adjacency from scratch.
VerifyResult verify_cover(const Graph& g, const FractionalCover& cover);

// Feasibility of a labeling: no admissible set sums above 1 (independent
// sets; cliques too in cocoloring mode). Negative labels are rejected as
// invalid arguments rather than reported.
VerifyResult verify_labeling(const Graph& g, const Labeling& labeling,
                             CoverMode mode, const Limits& limits = {});

// Full audit of a certified value: both certificates feasible and both
// weights exactly equal to the claimed value.
VerifyResult audit(const Graph& g, const CertifiedValue& cv,
                   const Limits& limits = {});

// Oracle equivalence: both methods on both parameters, values must agree.
struct MethodComparison {
  CertifiedValue chi_enumerated, chi_priced;
  CertifiedValue z_enumerated, z_priced;
};

MethodComparison cross_check(const Graph& g, const Limits& limits = {});

}  // namespace cofrac

#pragma once

namespace cofrac {

// Caps on exact exponential-time searches. All are overridable; raising them
// trades time for reach (worst cases are exponential in n).
struct Limits {
  // Full enumeration of maximal cliques / independent sets (3^(n/3) sets in
  // the worst case) and the all-columns LP built from them.
  int enumeration_max_n = 24;
  // Branch-and-bound maximum-weight set search; also the ceiling for column
  // generation and stats().
  int exact_search_max_n = 60;
  // Exact chromatic number.
  int integral_chi_max_n = 16;
  // Exact cochromatic number.
  int integral_z_max_n = 14;
  // Columns accepted by one dense exact LP solve.
  int lp_max_columns = 2048;
};

}  // namespace cofrac

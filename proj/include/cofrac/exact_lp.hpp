#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cofrac/limits.hpp"
#include "cofrac/rational.hpp"

namespace cofrac {

// Covering program over abstract rows: minimize the total weight of the
// chosen columns so that every row is covered with total weight at least 1.
// Each column lists the rows it covers.
struct CoveringLP {
  int num_rows = 0;
  std::vector<std::vector<int>> columns;
};

enum class LPStatus { optimal, infeasible };

struct LPSolution {
  LPStatus status = LPStatus::optimal;
  Rational value{0};
  // Positive column weights, sorted by column index.
  std::vector<std::pair<int, Rational>> primal;
  // One value per row; at optimality a feasible packing certificate.
  // When infeasible, the indicator of an uncoverable row instead.
  std::vector<Rational> dual;
  long pivots = 0;
};

LPSolution solve_covering(const CoveringLP& lp, const Limits& limits = {});

// Re-derives feasibility of both sides and equality of their values from
// scratch; used to audit solutions before they are surfaced anywhere.
bool check_duality(const CoveringLP& lp, const LPSolution& sol,
                   std::string* why = nullptr);

// Incremental exact simplex on the packing side: variables y >= 0, one
// constraint sum_{v in S} y_v <= 1 per added set S, objective max sum y.
// This is the covering program's dual, so the covering weights are read
// off the objective row and the covering dual is the variable vector.
// Rows are added one at a time; feasibility is restored by dual simplex
// pivots so the next optimize() starts warm.
class PackingSimplex {
 public:
  explicit PackingSimplex(int num_vars);

  // Adds the packing row for S (structural variable ids, strictly
  // ascending) and restores feasibility. Returns the row id.
  int add_constraint(const std::vector<int>& vars);

  // Primal simplex to optimality. Largest-coefficient entering rule,
  // falling back to Bland's rule while the objective stalls.
  void optimize();

  const Rational& objective() const { return z_; }
  std::vector<Rational> var_values() const;
  std::vector<Rational> row_weights() const;
  int num_vars() const { return n_; }
  int num_rows() const { return int(basis_.size()); }
  long pivots() const { return pivots_; }

 private:
  void pivot(int row, int col);
  void restore_feasibility();
  int width() const { return n_ + int(basis_.size()); }

  int n_;
  std::vector<std::vector<Rational>> t_;  // rows over all variable columns
  std::vector<Rational> b_;               // row right-hand sides
  std::vector<Rational> o_;               // reduced costs
  Rational z_{0};
  std::vector<int> basis_;  // row -> basic variable id
  std::vector<int> pos_;    // variable id -> row, -1 when nonbasic
  long pivots_ = 0;
  int stall_ = 0;
};

}  // namespace cofrac

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "cofrac/errors.hpp"
#include "cofrac/exact_lp.hpp"
#include "cofrac/rng.hpp"

using namespace cofrac;

namespace {

Rational primal_total(const LPSolution& sol) {
  Rational t(0);
  for (const auto& [col, w] : sol.primal) t += w;
  return t;
}

}  // namespace

TEST_CASE("single set covering everything") {
  CoveringLP lp;
  lp.num_rows = 3;
  lp.columns = {{0, 1, 2}};
  LPSolution sol = solve_covering(lp);
  REQUIRE(sol.status == LPStatus::optimal);
  CHECK(sol.value == 1);
  CHECK(sol.primal == std::vector<std::pair<int, Rational>>{{0, Rational(1)}});
  CHECK(check_duality(lp, sol));
}

TEST_CASE("fractional optimum on the odd cycle") {
  // Rows are the vertices of C_5, columns its five maximum independent
  // pairs; the optimum is 5/2 with uniform duals 1/2.
  CoveringLP lp;
  lp.num_rows = 5;
  lp.columns = {{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}};
  LPSolution sol = solve_covering(lp);
  REQUIRE(sol.status == LPStatus::optimal);
  CHECK(sol.value == ratio(5, 2));
  CHECK(primal_total(sol) == ratio(5, 2));
  Rational dual_total(0);
  for (const Rational& y : sol.dual) dual_total += y;
  CHECK(dual_total == ratio(5, 2));
  CHECK(check_duality(lp, sol));
}

TEST_CASE("uncoverable row is reported infeasible with a witness") {
  CoveringLP lp;
  lp.num_rows = 3;
  lp.columns = {{0}, {2}};
  LPSolution sol = solve_covering(lp);
  CHECK(sol.status == LPStatus::infeasible);
  CHECK(sol.dual[1] == 1);
  CHECK(sol.dual[0] == 0);
}

TEST_CASE("duplicate and dominated columns are harmless") {
  CoveringLP lp;
  lp.num_rows = 4;
  lp.columns = {{0}, {0}, {0, 1}, {0, 1}, {1, 2, 3}, {2}, {3}, {0, 1}};
  LPSolution sol = solve_covering(lp);
  REQUIRE(sol.status == LPStatus::optimal);
  CHECK(sol.value == 2);
  CHECK(check_duality(lp, sol));
}

TEST_CASE("empty program") {
  CoveringLP lp;
  LPSolution sol = solve_covering(lp);
  CHECK(sol.status == LPStatus::optimal);
  CHECK(sol.value == 0);
  CHECK(sol.primal.empty());
  CHECK(check_duality(lp, sol));
}

TEST_CASE("column count limit") {
  CoveringLP lp;
  lp.num_rows = 5;
  for (int i = 0; i < 5; ++i) lp.columns.push_back({i});
  for (int i = 0; i < 4; ++i) lp.columns.push_back({i, i + 1});
  Limits tight;
  tight.lp_max_columns = 4;
  CHECK_THROWS_AS(solve_covering(lp, tight), CapabilityError);
  CHECK(solve_covering(lp).status == LPStatus::optimal);
}

TEST_CASE("random covering programs certify optimality") {
  // check_duality re-derives primal feasibility, dual feasibility, and
  // exact equality of both objective values, which together prove
  // optimality; no independent solver is needed.
  SplitMix64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + int(rng.below(7));
    int cols = 1 + int(rng.below(10));
    CoveringLP lp;
    lp.num_rows = rows;
    for (int c = 0; c < cols; ++c) {
      std::vector<int> col;
      for (int r = 0; r < rows; ++r)
        if (rng.below(3) == 0) col.push_back(r);
      lp.columns.push_back(std::move(col));
    }
    LPSolution sol = solve_covering(lp);
    if (sol.status == LPStatus::optimal) {
      std::string why;
      bool ok = check_duality(lp, sol, &why);
      INFO(why);
      CHECK(ok);
      CHECK(primal_total(sol) == sol.value);
      // Covering optima on 0/1 data sit between 0 and the row count.
      CHECK(sol.value >= 0);
      CHECK(sol.value <= rows);
    } else {
      int witness = -1;
      for (int r = 0; r < rows; ++r)
        if (sol.dual[r] == 1) witness = r;
      REQUIRE(witness >= 0);
      for (const auto& col : lp.columns)
        for (int r : col) CHECK(r != witness);
    }
  }
}

TEST_CASE("adding a column never increases the optimum") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 2 + int(rng.below(5));
    CoveringLP lp;
    lp.num_rows = rows;
    for (int r = 0; r < rows; ++r) lp.columns.push_back({r});
    LPSolution before = solve_covering(lp);
    std::vector<int> wide;
    for (int r = 0; r < rows; ++r)
      if (rng.below(2) == 0) wide.push_back(r);
    lp.columns.push_back(wide);
    LPSolution after = solve_covering(lp);
    CHECK(after.value <= before.value);
    CHECK(check_duality(lp, after));
  }
}

TEST_CASE("check_duality rejects tampered solutions") {
  CoveringLP lp;
  lp.num_rows = 2;
  lp.columns = {{0, 1}};
  LPSolution sol = solve_covering(lp);
  REQUIRE(sol.status == LPStatus::optimal);

  LPSolution halved = sol;
  halved.primal[0].second /= 2;
  std::string why;
  CHECK(!check_duality(lp, halved, &why));
  CHECK(!why.empty());

  LPSolution inflated = sol;
  inflated.dual[0] += 1;
  CHECK(!check_duality(lp, inflated, &why));

  LPSolution wrong_value = sol;
  wrong_value.value += 1;
  CHECK(!check_duality(lp, wrong_value, &why));
}

TEST_CASE("packing simplex exposes exact values incrementally") {
  PackingSimplex simplex(5);
  for (const std::vector<int>& s :
       {std::vector<int>{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}})
    simplex.add_constraint(s);
  simplex.optimize();
  CHECK(simplex.objective() == ratio(5, 2));

  // A new tight row forces dual-simplex repair; the optimum drops.
  simplex.add_constraint({0, 1, 2, 3, 4});
  simplex.optimize();
  CHECK(simplex.objective() == 1);
  std::vector<Rational> weights = simplex.row_weights();
  Rational covering_total(0);
  for (const Rational& w : weights) {
    CHECK(w >= 0);
    covering_total += w;
  }
  CHECK(covering_total == 1);
}

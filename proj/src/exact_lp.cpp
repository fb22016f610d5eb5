#include "cofrac/exact_lp.hpp"

#include <algorithm>
#include <stdexcept>

#include "cofrac/errors.hpp"

namespace cofrac {

PackingSimplex::PackingSimplex(int num_vars) : n_(num_vars), o_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("negative variable count");
  pos_.assign(num_vars, -1);
  for (int v = 0; v < n_; ++v) o_[v] = 1;
}

int PackingSimplex::add_constraint(const std::vector<int>& vars) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] < 0 || vars[i] >= n_)
      throw std::invalid_argument("constraint variable out of range");
    if (i > 0 && vars[i - 1] >= vars[i])
      throw std::invalid_argument("constraint variables not ascending");
  }
  int r = int(basis_.size());
  int slack = n_ + r;
  for (auto& row : t_) row.emplace_back(0);
  o_.emplace_back(0);
  pos_.push_back(r);

  std::vector<Rational> row(slack + 1);
  Rational rhs(1);
  for (int v : vars) row[v] = 1;
  row[slack] = 1;
  // Express the new row in the current dictionary: basic variables other
  // than the fresh slack must be eliminated via their unit rows.
  for (int j = 0; j < slack; ++j) {
    if (row[j] == 0 || pos_[j] == -1) continue;
    Rational f = row[j];
    const auto& base = t_[pos_[j]];
    for (int k = 0; k < int(base.size()); ++k)
      if (base[k] != 0) row[k] -= f * base[k];
    rhs -= f * b_[pos_[j]];
  }
  t_.push_back(std::move(row));
  b_.push_back(std::move(rhs));
  basis_.push_back(slack);
  restore_feasibility();
  return r;
}

void PackingSimplex::pivot(int row, int col) {
  Rational piv = t_[row][col];
  if (piv == 0) throw InternalError("pivot on zero element");
  if (piv != 1) {
    for (Rational& x : t_[row])
      if (x != 0) x /= piv;
    b_[row] /= piv;
  }
  for (int i = 0; i < int(t_.size()); ++i) {
    if (i == row || t_[i][col] == 0) continue;
    Rational f = t_[i][col];
    const auto& src = t_[row];
    auto& dst = t_[i];
    for (int k = 0; k < int(src.size()); ++k)
      if (src[k] != 0) dst[k] -= f * src[k];
    b_[i] -= f * b_[row];
  }
  if (o_[col] != 0) {
    Rational f = o_[col];
    z_ += f * b_[row];
    for (int k = 0; k < int(t_[row].size()); ++k)
      if (t_[row][k] != 0) o_[k] -= f * t_[row][k];
  }
  pos_[basis_[row]] = -1;
  basis_[row] = col;
  pos_[col] = row;
  ++pivots_;
}

void PackingSimplex::restore_feasibility() {
  for (;;) {
    // Dual simplex, Bland order: leave the negative row whose basic
    // variable has the smallest id.
    int r = -1;
    for (int i = 0; i < int(t_.size()); ++i)
      if (b_[i] < 0 && (r == -1 || basis_[i] < basis_[r])) r = i;
    if (r == -1) return;
    int e = -1;
    Rational best;
    for (int j = 0; j < width(); ++j) {
      if (t_[r][j] >= 0) continue;
      Rational ratio = o_[j] / t_[r][j];
      if (e == -1 || ratio < best) {
        e = j;
        best = ratio;
      }
    }
    if (e == -1)
      throw InternalError("packing row unsatisfiable; dictionary corrupt");
    pivot(r, e);
  }
}

void PackingSimplex::optimize() {
  constexpr int kStallLimit = 12;
  for (;;) {
    int e = -1;
    if (stall_ < kStallLimit) {
      for (int j = 0; j < width(); ++j)
        if (o_[j] > 0 && (e == -1 || o_[j] > o_[e])) e = j;
    } else {
      for (int j = 0; j < width(); ++j)
        if (o_[j] > 0) {
          e = j;
          break;
        }
    }
    if (e == -1) {
      stall_ = 0;
      return;
    }
    int r = -1;
    Rational best;
    for (int i = 0; i < int(t_.size()); ++i) {
      if (t_[i][e] <= 0) continue;
      Rational ratio = b_[i] / t_[i][e];
      if (r == -1 || ratio < best ||
          (ratio == best && basis_[i] < basis_[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r == -1)
      throw InternalError("packing objective unbounded; missing constraints");
    Rational before = z_;
    pivot(r, e);
    stall_ = z_ > before ? 0 : stall_ + 1;
  }
}

std::vector<Rational> PackingSimplex::var_values() const {
  std::vector<Rational> y(n_);
  for (int v = 0; v < n_; ++v)
    if (pos_[v] != -1) y[v] = b_[pos_[v]];
  return y;
}

std::vector<Rational> PackingSimplex::row_weights() const {
  std::vector<Rational> x(basis_.size());
  for (int r = 0; r < int(basis_.size()); ++r) x[r] = -o_[n_ + r];
  return x;
}

LPSolution solve_covering(const CoveringLP& lp, const Limits& limits) {
  if (lp.num_rows < 0) throw std::invalid_argument("negative row count");
  for (const auto& col : lp.columns)
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] < 0 || col[i] >= lp.num_rows)
        throw std::invalid_argument("column entry out of range");
      if (i > 0 && col[i - 1] >= col[i])
        throw std::invalid_argument("column entries not ascending");
    }

  LPSolution sol;
  sol.dual.assign(lp.num_rows, Rational(0));
  if (lp.num_rows == 0) return sol;

  // A row no column touches is uncoverable; its indicator scales without
  // bound on the packing side.
  std::vector<char> covered(lp.num_rows, 0);
  for (const auto& col : lp.columns)
    for (int v : col) covered[v] = 1;
  for (int v = 0; v < lp.num_rows; ++v) {
    if (!covered[v]) {
      sol.status = LPStatus::infeasible;
      sol.dual[v] = 1;
      return sol;
    }
  }

  PackingSimplex engine(lp.num_rows);
  int m = int(lp.columns.size());
  std::vector<int> added_col;       // engine row -> column index
  std::vector<char> in_engine(m, 0);

  auto add = [&](int j) {
    if (int(added_col.size()) >= limits.lp_max_columns)
      throw CapabilityError("active column limit exceeded (" +
                            std::to_string(limits.lp_max_columns) + ")");
    engine.add_constraint(lp.columns[j]);
    added_col.push_back(j);
    in_engine[j] = 1;
  };

  if (m <= 2 * lp.num_rows) {
    for (int j = 0; j < m; ++j) add(j);
  } else {
    // Large pools: activate one covering column per row, then price the
    // rest against the packing values until none is violated.
    std::vector<char> have(lp.num_rows, 0);
    for (int v = 0; v < lp.num_rows; ++v) {
      if (have[v]) continue;
      for (int j = 0; j < m; ++j) {
        if (std::binary_search(lp.columns[j].begin(), lp.columns[j].end(), v)) {
          add(j);
          for (int u : lp.columns[j]) have[u] = 1;
          break;
        }
      }
    }
  }

  for (;;) {
    engine.optimize();
    std::vector<Rational> y = engine.var_values();
    int pick = -1;
    Rational worst(1);
    for (int j = 0; j < m; ++j) {
      if (in_engine[j]) continue;
      Rational s(0);
      for (int v : lp.columns[j]) s += y[v];
      if (s > worst) {
        worst = s;
        pick = j;
      }
    }
    if (pick == -1) break;
    add(pick);
  }

  sol.value = engine.objective();
  sol.dual = engine.var_values();
  std::vector<Rational> x = engine.row_weights();
  for (int r = 0; r < int(x.size()); ++r)
    if (x[r] != 0) sol.primal.emplace_back(added_col[r], x[r]);
  std::sort(sol.primal.begin(), sol.primal.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  sol.pivots = engine.pivots();
  return sol;
}

bool check_duality(const CoveringLP& lp, const LPSolution& sol,
                   std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (sol.status != LPStatus::optimal) return fail("solution not optimal");
  if (int(sol.dual.size()) != lp.num_rows) return fail("dual size mismatch");

  Rational primal_total(0);
  std::vector<Rational> row_cover(lp.num_rows, Rational(0));
  for (const auto& [j, w] : sol.primal) {
    if (j < 0 || j >= int(lp.columns.size()))
      return fail("primal column index out of range");
    if (w <= 0) return fail("nonpositive primal weight");
    primal_total += w;
    for (int v : lp.columns[j]) row_cover[v] += w;
  }
  if (primal_total != sol.value) return fail("primal value mismatch");
  for (int v = 0; v < lp.num_rows; ++v)
    if (row_cover[v] < 1)
      return fail("row " + std::to_string(v) + " covered " +
                  to_string(row_cover[v]) + " < 1");

  Rational dual_total(0);
  for (int v = 0; v < lp.num_rows; ++v) {
    if (sol.dual[v] < 0) return fail("negative dual value");
    dual_total += sol.dual[v];
  }
  if (dual_total != sol.value) return fail("dual value mismatch");
  for (std::size_t j = 0; j < lp.columns.size(); ++j) {
    Rational s(0);
    for (int v : lp.columns[j]) s += sol.dual[v];
    if (s > 1)
      return fail("column " + std::to_string(j) + " packs " + to_string(s) +
                  " > 1");
  }
  return true;
}

}  // namespace cofrac

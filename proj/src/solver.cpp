#include "cofrac/solver.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "cofrac/errors.hpp"
#include "cofrac/exact_lp.hpp"

namespace cofrac {

Rational FractionalCover::total_weight() const {
  Rational t(0);
  for (const CoverEntry& e : entries) t += e.weight;
  return t;
}

CoverMode mode_for(Parameter p) {
  return p == Parameter::chi_f ? CoverMode::coloring : CoverMode::cocoloring;
}

namespace {

// Enumeration path: one covering column per maximal admissible set.
CertifiedValue solve_by_enumeration(const Graph& g, Parameter p,
                                    const Limits& limits) {
  std::vector<VertexSet> sets = enumerate_maximal_independent_sets(g, limits);
  if (p == Parameter::z_f) {
    std::set<VertexSet> seen(sets.begin(), sets.end());
    for (VertexSet& c : enumerate_maximal_cliques(g, limits))
      if (seen.insert(c).second) sets.push_back(std::move(c));
  }
  CoveringLP lp;
  lp.num_rows = g.n();
  lp.columns.reserve(sets.size());
  for (const VertexSet& s : sets) lp.columns.push_back(s.members);
  LPSolution sol = solve_covering(lp, limits);
  if (sol.status != LPStatus::optimal)
    throw InternalError("maximal sets failed to cover some vertex");

  CertifiedValue cv;
  cv.parameter = p;
  cv.value = sol.value;
  cv.cover.mode = mode_for(p);
  for (const auto& [j, w] : sol.primal)
    cv.cover.entries.push_back({sets[j], w});
  cv.dual = Labeling(g.n());
  for (int v = 0; v < g.n(); ++v) cv.dual.values[v] = sol.dual[v];
  cv.stats.lp_pivots = sol.pivots;
  cv.stats.lp_columns = int(lp.columns.size());
  return cv;
}

// Column generation path: seed singletons, then alternate between solving
// the restricted program and asking the exact oracles for a violated set.
CertifiedValue solve_by_pricing(const Graph& g, Parameter p,
                                const Limits& limits) {
  if (g.n() > limits.exact_search_max_n)
    throw CapabilityError("column generation limited to n <= " +
                          std::to_string(limits.exact_search_max_n));
  PackingSimplex engine(g.n());
  std::vector<VertexSet> columns;
  std::set<VertexSet> seen;
  auto push = [&](const VertexSet& s) {
    if (!seen.insert(s).second)
      throw InternalError("oracle produced an already priced column");
    if (int(columns.size()) >= limits.lp_max_columns)
      throw CapabilityError("active column limit exceeded (" +
                            std::to_string(limits.lp_max_columns) + ")");
    engine.add_constraint(s.members);
    columns.push_back(s);
  };
  for (int v = 0; v < g.n(); ++v)
    push(VertexSet{{v}, SetKind::independent});

  Graph co = complement(g);
  int rounds = 0;
  for (;;) {
    engine.optimize();
    Labeling y(g.n());
    std::vector<Rational> vals = engine.var_values();
    for (int v = 0; v < g.n(); ++v) y.values[v] = vals[v];
    ++rounds;
    bool grew = false;
    WeightedSet is = max_weight_independent_set(g, y, limits);
    if (is.weight > 1) {
      push(is.set);
      grew = true;
    }
    if (p == Parameter::z_f) {
      // Max-weight clique, searched as an independent set of the complement.
      WeightedSet cl = max_weight_independent_set(co, y, limits);
      if (cl.weight > 1) {
        cl.set.kind = SetKind::clique;
        push(cl.set);
        grew = true;
      }
    }
    if (!grew) break;
  }

  CertifiedValue cv;
  cv.parameter = p;
  cv.value = engine.objective();
  cv.cover.mode = mode_for(p);
  std::vector<Rational> x = engine.row_weights();
  for (int r = 0; r < int(x.size()); ++r)
    if (x[r] != 0) cv.cover.entries.push_back({columns[r], x[r]});
  cv.dual = Labeling(g.n());
  std::vector<Rational> vals = engine.var_values();
  for (int v = 0; v < g.n(); ++v) cv.dual.values[v] = vals[v];
  cv.stats.lp_pivots = engine.pivots();
  cv.stats.lp_columns = int(columns.size());
  cv.stats.pricing_rounds = rounds;
  return cv;
}

CertifiedValue solve(const Graph& g, Parameter p, SolveMethod method,
                     const Limits& limits) {
  auto start = std::chrono::steady_clock::now();
  CertifiedValue cv;
  if (g.n() == 0) {
    cv.parameter = p;
    cv.cover.mode = mode_for(p);
  } else {
    SolveMethod chosen = method;
    if (chosen == SolveMethod::automatic)
      chosen = g.n() <= limits.enumeration_max_n
                   ? SolveMethod::enumeration
                   : SolveMethod::column_generation;
    cv = chosen == SolveMethod::enumeration
             ? solve_by_enumeration(g, p, limits)
             : solve_by_pricing(g, p, limits);
    cv.stats.method_used = chosen;
    std::sort(cv.cover.entries.begin(), cv.cover.entries.end(),
              [](const CoverEntry& a, const CoverEntry& b) {
                return a.set < b.set;
              });
  }
  cv.stats.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  VerifyResult check = audit(g, cv, limits);
  if (!check.ok)
    throw InternalError("solution failed self-audit: " + check.detail);
  return cv;
}

}  // namespace

CertifiedValue chi_f(const Graph& g, SolveMethod method, const Limits& limits) {
  return solve(g, Parameter::chi_f, method, limits);
}

CertifiedValue z_f(const Graph& g, SolveMethod method, const Limits& limits) {
  return solve(g, Parameter::z_f, method, limits);
}

VerifyResult verify_cover(const Graph& g, const FractionalCover& cover) {
  auto fail = [](std::string d) { return VerifyResult{false, std::move(d)}; };
  std::vector<Rational> covered(g.n(), Rational(0));
  for (std::size_t i = 0; i < cover.entries.size(); ++i) {
    const CoverEntry& e = cover.entries[i];
    if (e.weight <= 0)
      return fail("entry " + std::to_string(i) + " has weight " +
                  to_string(e.weight) + " <= 0");
    if (cover.mode == CoverMode::coloring && e.set.kind == SetKind::clique)
      return fail("entry " + std::to_string(i) +
                  " is a clique in a coloring cover");
    if (!is_valid_set(g, e.set))
      return fail("entry " + std::to_string(i) + " is not a valid " +
                  (e.set.kind == SetKind::clique
                       ? std::string("clique")
                       : std::string("independent set")));
    for (int v : e.set.members) covered[v] += e.weight;
  }
  for (int v = 0; v < g.n(); ++v)
    if (covered[v] < 1)
      return fail("vertex " + std::to_string(v) + " covered " +
                  to_string(covered[v]) + " < 1");
  return {};
}

VerifyResult verify_labeling(const Graph& g, const Labeling& labeling,
                             CoverMode mode, const Limits& limits) {
  auto fail = [](std::string d) { return VerifyResult{false, std::move(d)}; };
  if (labeling.size() != g.n())
    return fail("labeling has " + std::to_string(labeling.size()) +
                " entries for a graph on " + std::to_string(g.n()));
  for (int v = 0; v < g.n(); ++v)
    if (labeling.values[v] < 0)
      throw std::invalid_argument("negative label on vertex " +
                                  std::to_string(v));
  if (g.n() == 0) return {};
  auto show = [](const std::vector<int>& ms) {
    std::string s = "{";
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(ms[i]);
    }
    return s + "}";
  };
  WeightedSet is = max_weight_independent_set(g, labeling, limits);
  if (is.weight > 1)
    return fail("independent set " + show(is.set.members) + " has weight " +
                to_string(is.weight) + " > 1");
  if (mode == CoverMode::cocoloring) {
    WeightedSet cl = max_weight_clique(g, labeling, limits);
    if (cl.weight > 1)
      return fail("clique " + show(cl.set.members) + " has weight " +
                  to_string(cl.weight) + " > 1");
  }
  return {};
}

VerifyResult audit(const Graph& g, const CertifiedValue& cv,
                   const Limits& limits) {
  if (cv.cover.mode != mode_for(cv.parameter))
    return {false, "cover mode does not match parameter"};
  VerifyResult r = verify_cover(g, cv.cover);
  if (!r.ok) return r;
  Rational total = cv.cover.total_weight();
  if (total != cv.value)
    return {false, "cover weight " + to_string(total) + " != value " +
                       to_string(cv.value)};
  r = verify_labeling(g, cv.dual, cv.cover.mode, limits);
  if (!r.ok) return r;
  Rational dual = cv.dual.weight();
  if (dual != cv.value)
    return {false, "dual weight " + to_string(dual) + " != value " +
                       to_string(cv.value)};
  return {};
}

MethodComparison cross_check(const Graph& g, const Limits& limits) {
  MethodComparison mc;
  mc.chi_enumerated = chi_f(g, SolveMethod::enumeration, limits);
  mc.chi_priced = chi_f(g, SolveMethod::column_generation, limits);
  mc.z_enumerated = z_f(g, SolveMethod::enumeration, limits);
  mc.z_priced = z_f(g, SolveMethod::column_generation, limits);
  if (mc.chi_enumerated.value != mc.chi_priced.value)
    throw InternalError("methods disagree: enumeration " +
                        to_string(mc.chi_enumerated.value) +
                        " vs pricing " + to_string(mc.chi_priced.value));
  if (mc.z_enumerated.value != mc.z_priced.value)
    throw InternalError("methods disagree: enumeration " +
                        to_string(mc.z_enumerated.value) + " vs pricing " +
                        to_string(mc.z_priced.value));
  return mc;
}

}  // namespace cofrac

#include "cofrac/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cofrac/errors.hpp"
#include "cofrac/integral.hpp"
#include "cofrac/rng.hpp"
#include "cofrac/subset_oracle.hpp"

namespace cofrac {

namespace {

std::string q(const Rational& r) { return to_string(r); }

// Smallest integer >= value, for positive value.
int ceil_positive(const Rational& value, int cap) {
  Integer num = numerator(value), den = denominator(value);
  Integer c = (num + den - 1) / den;
  if (c > cap) return cap;
  return int(c.convert_to<long>());
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (seen[v]) continue;
    std::vector<int> comp, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u).to_vector())
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// A star component has one center adjacent to every other member and no
// further edges; K_2 counts with either endpoint as center.
bool star_component(const Graph& g, const std::vector<int>& comp, int* t_out) {
  long edges = 0;
  int center_degree = -1;
  for (int v : comp) {
    edges += g.degree(v);
    center_degree = std::max(center_degree, g.degree(v));
  }
  edges /= 2;
  int size = int(comp.size());
  if (center_degree != size - 1 || edges != size - 1) return false;
  *t_out = size - 1;
  return true;
}

Rational star_formula(int t, int s) {
  return s == 0 ? Rational(2) - ratio(1, t) : Rational(2) - ratio(1, t + 1);
}

constexpr Verdict kHolds = Verdict::holds;
constexpr Verdict kFails = Verdict::fails;

}  // namespace

TheoremReport check_example1(int t, int s, const Limits& limits) {
  if (t < 1 || s < 0) throw std::invalid_argument("need t >= 1 and s >= 0");
  Graph g = gen_star(t, s);
  CertifiedValue zf = z_f(g, SolveMethod::automatic, limits);
  Rational expected = star_formula(t, s);
  TheoremReport rep;
  rep.theorem_id = "example1";
  rep.graph = g.provenance();
  rep.quantities["t"] = std::to_string(t);
  rep.quantities["s"] = std::to_string(s);
  rep.quantities["z_f"] = q(zf.value);
  rep.quantities["expected"] = q(expected);
  rep.verdict = zf.value == expected ? kHolds : kFails;
  if (rep.verdict == kFails)
    rep.detail = "computed " + q(zf.value) + ", formula gives " + q(expected);
  return rep;
}

TheoremReport check_proposition1(const Graph& g, const Limits& limits) {
  TheoremReport rep;
  rep.theorem_id = "prop1";
  rep.graph = g.provenance();
  if (g.n() == 0) {
    rep.detail = "empty graph, bound vacuous";
    return rep;
  }
  GraphStats st = stats(g, limits);
  int k = std::max(st.alpha, st.omega);
  Rational bound = ratio(g.n(), k);
  CertifiedValue zf = z_f(g, SolveMethod::automatic, limits);
  rep.quantities["n"] = std::to_string(g.n());
  rep.quantities["alpha"] = std::to_string(st.alpha);
  rep.quantities["omega"] = std::to_string(st.omega);
  rep.quantities["bound"] = q(bound);
  rep.quantities["z_f"] = q(zf.value);
  bool transitive = g.vertex_transitive_by_construction();
  rep.quantities["transitive"] = transitive ? "1" : "0";
  if (zf.value < bound) {
    rep.verdict = kFails;
    rep.detail = "Z_f " + q(zf.value) + " below bound " + q(bound);
  } else if (transitive && zf.value != bound) {
    rep.verdict = kFails;
    rep.detail = "transitive graph misses equality: Z_f " + q(zf.value) +
                 " vs " + q(bound);
  }
  return rep;
}

TheoremReport check_theorem5(const Graph& g, int k, const Limits& limits) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  TheoremReport rep;
  rep.theorem_id = "thm5";
  rep.graph = g.provenance();
  rep.quantities["k"] = std::to_string(k);
  int omega = stats(g, limits).omega;
  rep.quantities["omega"] = std::to_string(omega);
  if (k < omega) {
    rep.verdict = Verdict::not_applicable;
    rep.detail = "k < omega(G), theorem does not apply";
    return rep;
  }
  Graph kg = disjoint_union(g, k);
  Rational chi_g = chi_f(g, SolveMethod::automatic, limits).value;
  Rational chi_kg = chi_f(kg, SolveMethod::automatic, limits).value;
  Rational z_kg = z_f(kg, SolveMethod::automatic, limits).value;
  rep.quantities["chi_f_G"] = q(chi_g);
  rep.quantities["chi_f_kG"] = q(chi_kg);
  rep.quantities["z_f_kG"] = q(z_kg);
  if (z_kg != chi_kg || chi_kg != chi_g) {
    rep.verdict = kFails;
    rep.detail = "expected all three equal";
  }
  return rep;
}

TheoremReport check_theorem6(const Graph& g, const Limits& limits) {
  TheoremReport rep;
  rep.theorem_id = "thm6";
  rep.graph = g.provenance();
  GraphStats st = stats(g, limits);
  if (!st.triangle_free) {
    rep.verdict = Verdict::not_applicable;
    rep.detail = "graph has a triangle";
    return rep;
  }
  Rational chi = chi_f(g, SolveMethod::automatic, limits).value;
  Rational zf = z_f(g, SolveMethod::automatic, limits).value;
  rep.quantities["chi_f"] = q(chi);
  rep.quantities["z_f"] = q(zf);

  int star_t = 0, star_size = 0, edge_components = 0;
  bool star = false;
  for (const std::vector<int>& comp : components(g)) {
    long edges = 0;
    for (int v : comp) edges += g.degree(v);
    if (edges == 0) continue;
    ++edge_components;
    int t = 0;
    if (star_component(g, comp, &t)) {
      star = true;
      star_t = t;
      star_size = int(comp.size());
    }
  }
  bool exceptional = edge_components == 1 && star;
  if (!exceptional) {
    if (chi != zf) {
      rep.verdict = kFails;
      rep.detail = "chi_f " + q(chi) + " != Z_f " + q(zf);
    }
    return rep;
  }
  int s = g.n() - star_size;
  Rational expected = star_formula(star_t, s);
  rep.quantities["t"] = std::to_string(star_t);
  rep.quantities["s"] = std::to_string(s);
  rep.quantities["expected_z_f"] = q(expected);
  if (chi == 2 && zf == expected) {
    rep.verdict = Verdict::exception;
    rep.detail = "star family K_{1," + std::to_string(star_t) + "} plus " +
                 std::to_string(s) + " isolated vertices";
  } else {
    rep.verdict = kFails;
    rep.detail = "exceptional graph off formula: chi_f " + q(chi) +
                 ", Z_f " + q(zf) + ", expected " + q(expected);
  }
  return rep;
}

TheoremReport check_mycielski(const Graph& g, const Limits& limits) {
  TheoremReport rep;
  rep.theorem_id = "mycielski";
  rep.graph = g.provenance();
  if (g.n() == 0) {
    rep.verdict = Verdict::not_applicable;
    rep.detail = "formula c + 1/c needs a nonempty graph";
    return rep;
  }
  Rational c = chi_f(g, SolveMethod::automatic, limits).value;
  Graph m = gen_mycielski(g);
  Rational cm = chi_f(m, SolveMethod::automatic, limits).value;
  Rational expected = c + Rational(1) / c;
  rep.quantities["chi_f"] = q(c);
  rep.quantities["chi_f_mycielskian"] = q(cm);
  rep.quantities["expected"] = q(expected);
  if (cm != expected) {
    rep.verdict = kFails;
    rep.detail = "computed " + q(cm) + ", formula gives " + q(expected);
  }
  return rep;
}

TheoremReport check_kneser(int a, int b, const Limits& limits) {
  if (b < 1 || a < 2 * b)
    throw std::invalid_argument("need b >= 1 and a >= 2b");
  Graph g = gen_kneser(a, b);
  TheoremReport rep;
  rep.theorem_id = "kneser";
  rep.graph = g.provenance();
  rep.quantities["a"] = std::to_string(a);
  rep.quantities["b"] = std::to_string(b);
  Rational chi = chi_f(g, SolveMethod::automatic, limits).value;
  Rational expected = ratio(a, b);
  rep.quantities["chi_f"] = q(chi);
  rep.quantities["expected"] = q(expected);
  if (chi != expected) {
    rep.verdict = kFails;
    rep.detail = "chi_f " + q(chi) + " != " + q(expected);
    return rep;
  }
  if (a == 3 * b - 1) {
    Rational zf = z_f(g, SolveMethod::automatic, limits).value;
    rep.quantities["z_f"] = q(zf);
    if (b == 1) {
      // K_{2:1} = K_2 sits in the star family, where Z_f = 1, not 3 - 1/b.
      rep.verdict = zf == 1 ? Verdict::exception : kFails;
      rep.detail = rep.verdict == Verdict::exception
                       ? "K_2 is in the star family; Z_f = 1"
                       : "Z_f of K_2 computed as " + q(zf);
      return rep;
    }
    Rational zexp = Rational(3) - ratio(1, b);
    rep.quantities["expected_z_f"] = q(zexp);
    if (zf != zexp) {
      rep.verdict = kFails;
      rep.detail = "Z_f " + q(zf) + " != " + q(zexp);
    }
  }
  return rep;
}

std::pair<FractionalCover, RamseyConversionTrace> ramsey_convert(
    const Graph& g, const FractionalCover& cover, const Limits& limits) {
  VerifyResult valid = verify_cover(g, cover);
  if (!valid.ok)
    throw std::invalid_argument("input cover invalid: " + valid.detail);

  int n = g.n();
  RamseyConversionTrace trace;
  trace.input_weight = cover.total_weight();
  trace.residues.push_back(0);
  if (n == 0) {
    trace.k = 1;
    trace.R = 1;
    return {FractionalCover{CoverMode::coloring, {}}, trace};
  }

  int omega = stats(g, limits).omega;
  trace.k = omega + 1;
  static const std::map<int, int> kRamsey{{2, 2}, {3, 6}, {4, 18}};
  auto it = kRamsey.find(trace.k);
  if (it == kRamsey.end())
    throw CapabilityError("R(" + std::to_string(trace.k) + "," +
                          std::to_string(trace.k) +
                          ") is not known exactly; omega must be <= 3");
  trace.R = it->second;

  // Clique weight per vertex decides its level; level i carries weight in
  // ((i-1)/n, i/n]. Weights above 1 (possible in wasteful covers) clamp to
  // level n, which only strengthens the replacement.
  std::vector<Rational> clique_weight(n, Rational(0));
  for (const CoverEntry& e : cover.entries)
    if (e.set.kind == SetKind::clique)
      for (int v : e.set.members) clique_weight[v] += e.weight;
  std::vector<std::vector<int>> level(n + 1);
  for (int v = 0; v < n; ++v)
    if (clique_weight[v] > 0)
      level[ceil_positive(clique_weight[v] * n, n)].push_back(v);

  std::map<VertexSet, Rational> out;
  for (const CoverEntry& e : cover.entries)
    if (e.set.kind == SetKind::independent) out[e.set] += e.weight;

  Bits carried(n);
  int carried_count = 0;
  for (int i = 1; i <= n; ++i) {
    trace.partition_sizes.push_back(int(level[i].size()));
    for (int v : level[i]) carried.set(v);
    carried_count += int(level[i].size());
    int extracted = 0;
    while (carried_count >= trace.R) {
      auto found = find_independent_set_of_size(g, carried, trace.k);
      if (!found)
        throw InternalError("no independent " + std::to_string(trace.k) +
                            "-set among " + std::to_string(carried_count) +
                            " >= R vertices");
      for (int v : *found) carried.reset(v);
      carried_count -= trace.k;
      out[VertexSet{*found, SetKind::independent}] += ratio(i, n);
      ++extracted;
    }
    trace.s.push_back(extracted);
    trace.residues.push_back(carried_count);
    if (carried_count >= trace.R || trace.residues[i] !=
        trace.partition_sizes[i - 1] + trace.residues[i - 1] -
            trace.s[i - 1] * trace.k)
      throw InternalError("level accounting identity violated");
  }
  for (int v = carried.first(); v != -1; v = carried.next(v))
    out[VertexSet{{v}, SetKind::independent}] += 1;

  FractionalCover result{CoverMode::coloring, {}};
  for (auto& [set, weight] : out) result.entries.push_back({set, weight});
  trace.output_weight = result.total_weight();

  VerifyResult check = verify_cover(g, result);
  if (!check.ok)
    throw InternalError("converted cover infeasible: " + check.detail);
  if (trace.output_weight > trace.input_weight + trace.R)
    throw InternalError("conversion exceeded the additive Ramsey bound");
  return {std::move(result), trace};
}

TheoremReport check_theorem7(const Graph& g, const Limits& limits) {
  TheoremReport rep;
  rep.theorem_id = "thm7";
  rep.graph = g.provenance();
  int omega = g.n() == 0 ? 0 : stats(g, limits).omega;
  if (omega > 3) {
    rep.verdict = Verdict::not_applicable;
    rep.detail = "omega > 3: R(omega+1, omega+1) not in the table";
    return rep;
  }
  CertifiedValue zf = z_f(g, SolveMethod::automatic, limits);
  auto [colored, trace] = ramsey_convert(g, zf.cover, limits);
  Rational chi = chi_f(g, SolveMethod::automatic, limits).value;
  rep.quantities["k"] = std::to_string(trace.k);
  rep.quantities["R"] = std::to_string(trace.R);
  rep.quantities["z_f"] = q(zf.value);
  rep.quantities["chi_f"] = q(chi);
  rep.quantities["converted_weight"] = q(trace.output_weight);
  bool ok = chi <= trace.output_weight &&
            trace.output_weight <= zf.value + trace.R &&
            chi <= zf.value + trace.R;
  if (!ok) {
    rep.verdict = kFails;
    rep.detail = "bound chain broken";
  }
  return rep;
}

AksSample aks_subgraph_sample(const Graph& g, std::uint64_t seed,
                              const Limits& limits) {
  CertifiedValue zf = z_f(g, SolveMethod::automatic, limits);
  std::vector<Rational> clique_weight(g.n(), Rational(0));
  for (const CoverEntry& e : zf.cover.entries)
    if (e.set.kind == SetKind::clique)
      for (int v : e.set.members) clique_weight[v] += e.weight;
  AksSample sample;
  Rational half = ratio(1, 2);
  for (int v = 0; v < g.n(); ++v)
    if (clique_weight[v] >= half) sample.v1.push_back(v);
  sample.v1_empty = sample.v1.empty();
  Graph g1 = induced_subgraph(g, sample.v1);
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> kept;
  for (const auto& e : g1.edges())
    if (rng.bernoulli(half)) kept.push_back(e);
  sample.h = Graph(
      g1.n(), std::move(kept),
      Provenance{"aks-sample", {std::to_string(g1.n()), std::to_string(seed)}});
  sample.zf_h = z_f(sample.h, SolveMethod::automatic, limits);
  return sample;
}

Remark6Report remark6_experiment(int n, std::uint64_t seed,
                                 const Limits& limits) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  Graph g = gen_random(n, ratio(1, 2), seed);
  GraphStats st = stats(g, limits);
  Remark6Report rep;
  rep.n = n;
  rep.seed = seed;
  rep.alpha = st.alpha;
  rep.omega = st.omega;
  rep.lower = ratio(n, std::max(st.alpha, st.omega));
  rep.zf = z_f(g, SolveMethod::automatic, limits).value;
  rep.chi_greedy = greedy_coloring_bound(g);
  rep.reference = n >= 2 ? n / (2.0 * std::log2(double(n))) : 0.0;
  rep.sandwich_ok = rep.lower <= rep.zf && rep.zf <= rep.chi_greedy;
  return rep;
}

GapReport gap_experiment(int n, const Rational& eps, std::uint64_t seed,
                         const Limits& limits) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (eps <= 0 || eps > 1)
    throw std::invalid_argument("need 0 < eps <= 1 so that p is in (1/2, 1]");
  GapReport rep;
  rep.n = n;
  rep.eps = eps;
  rep.seed = seed;
  rep.p = Rational(1) / (Rational(2) - eps);
  Graph g = gen_random(n, rep.p, seed);
  rep.alpha = stats(g, limits).alpha;
  rep.chi_complement = integral_chi(complement(g), limits);
  rep.chi_f_value = chi_f(g, SolveMethod::automatic, limits).value;
  rep.z_f_value = z_f(g, SolveMethod::automatic, limits).value;
  rep.lhs = ratio(n, rep.alpha) - rep.chi_complement;
  rep.rhs = rep.chi_f_value - rep.z_f_value;
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

NmSearchResult zf_nm_search(int n, long m, int trials, std::uint64_t seed,
                            const Limits& limits) {
  long all = long(n) * (n - 1) / 2;
  if (n < 1 || m < 0 || m > all)
    throw std::invalid_argument("need 0 <= m <= n(n-1)/2");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  SplitMix64 rng(seed);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng.below(i)]);

  Provenance prov{"nm-search",
                  {std::to_string(n), std::to_string(m), std::to_string(seed)}};
  std::vector<std::pair<int, int>> present(pairs.begin(), pairs.begin() + m);
  auto make = [&](std::vector<std::pair<int, int>> edges) {
    return Graph(n, std::move(edges), prov);
  };
  NmSearchResult result;
  Graph current = make(present);
  Rational current_value = z_f(current, SolveMethod::automatic, limits).value;
  result.witness = current;
  result.best = current_value;
  result.evaluated = 1;

  if (m > 0 && m < all) {
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<std::pair<int, int>> edges = current.edges();
      std::vector<std::pair<int, int>> absent;
      for (const auto& pr : pairs)
        if (!current.has_edge(pr.first, pr.second)) absent.push_back(pr);
      std::sort(absent.begin(), absent.end());
      edges[rng.below(edges.size())] = absent[rng.below(absent.size())];
      Graph next = make(std::move(edges));
      Rational value = z_f(next, SolveMethod::automatic, limits).value;
      ++result.evaluated;
      if (value >= current_value) {
        current = std::move(next);
        current_value = value;
        if (value > result.best) {
          result.best = value;
          result.witness = current;
        }
      }
    }
  }
  // The parameter is complement-symmetric; the witness must agree with its
  // complement exactly or the solver is wrong.
  Rational co = z_f(complement(result.witness), SolveMethod::automatic, limits)
                    .value;
  if (co != result.best)
    throw InternalError("Z_f(witness) " + q(result.best) +
                        " != Z_f(complement) " + q(co));
  return result;
}

Graph sample_triangle_free(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("need n >= 0");
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  SplitMix64 rng(seed);
  for (std::size_t i = pairs.size(); i > 1; --i)
    std::swap(pairs[i - 1], pairs[rng.below(i)]);
  std::vector<Bits> adj(n, Bits(n));
  std::vector<std::pair<int, int>> edges;
  Rational half = ratio(1, 2);
  for (const auto& [u, v] : pairs) {
    bool coin = rng.bernoulli(half);
    if (!coin || adj[u].intersects(adj[v])) continue;
    adj[u].set(v);
    adj[v].set(u);
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges),
               Provenance{"triangle-free-sample",
                          {std::to_string(n), std::to_string(seed)}});
}

}  // namespace cofrac

#include "cofrac/subset_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cofrac/errors.hpp"

namespace cofrac {

bool is_clique(const Graph& g, const std::vector<int>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.has_edge(members[i], members[j])) return false;
  return true;
}

bool is_independent_set(const Graph& g, const std::vector<int>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.has_edge(members[i], members[j])) return false;
  return true;
}

bool is_valid_set(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    int v = s.members[i];
    if (v < 0 || v >= g.n()) return false;
    if (i > 0 && s.members[i - 1] >= v) return false;
  }
  return s.kind == SetKind::clique ? is_clique(g, s.members)
                                   : is_independent_set(g, s.members);
}

namespace {

// Singletons and the empty set are canonically independent.
VertexSet make_set(std::vector<int> members, SetKind kind) {
  if (members.size() <= 1) kind = SetKind::independent;
  return VertexSet{std::move(members), kind};
}

// Bron-Kerbosch with greedy pivoting; emits each maximal clique once.
class CliqueEnumerator {
 public:
  explicit CliqueEnumerator(const Graph& g) : g_(g) {}

  std::vector<VertexSet> run() {
    if (g_.n() == 0) return {};
    std::vector<int> r;
    expand(r, Bits::all(g_.n()), Bits(g_.n()));
    std::sort(out_.begin(), out_.end());
    return out_;
  }

 private:
  void expand(std::vector<int>& r, Bits p, Bits x) {
    if (p.none() && x.none()) {
      std::vector<int> members = r;
      std::sort(members.begin(), members.end());
      out_.push_back(make_set(std::move(members), SetKind::clique));
      return;
    }
    // Pivot with the most candidate neighbors, smallest id on ties.
    int pivot = -1, best = -1;
    for (int u = p.first(); u != -1; u = p.next(u)) {
      int c = p.intersection_count(g_.neighbors(u));
      if (c > best) best = c, pivot = u;
    }
    for (int u = x.first(); u != -1; u = x.next(u)) {
      int c = p.intersection_count(g_.neighbors(u));
      if (c > best) best = c, pivot = u;
    }
    Bits ext = p;
    ext.subtract(g_.neighbors(pivot));
    for (int v = ext.first(); v != -1; v = ext.next(v)) {
      r.push_back(v);
      expand(r, p & g_.neighbors(v), x & g_.neighbors(v));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  const Graph& g_;
  std::vector<VertexSet> out_;
};

}  // namespace

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g,
                                                 const Limits& limits) {
  if (g.n() > limits.enumeration_max_n)
    throw CapabilityError("enumeration limited to n <= " +
                          std::to_string(limits.enumeration_max_n) +
                          "; use column generation");
  return CliqueEnumerator(g).run();
}

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph& g,
                                                          const Limits& limits) {
  if (g.n() > limits.enumeration_max_n)
    throw CapabilityError("enumeration limited to n <= " +
                          std::to_string(limits.enumeration_max_n) +
                          "; use column generation");
  std::vector<VertexSet> sets = CliqueEnumerator(complement(g)).run();
  for (VertexSet& s : sets) s.kind = SetKind::independent;
  return sets;
}

namespace {

// Exact maximum-weight independent set in two passes. Pass one establishes
// the optimal weight with an unconstrained branching order; pass two walks
// the include-first ascending tree and stops at the first optimum, which
// after dropping a zero-weight tail is the lexicographically smallest one.
class MwisSearch {
 public:
  MwisSearch(const Graph& g, const std::vector<Rational>& w) : g_(g), w_(w) {}

  WeightedSet run() {
    best_ = greedy_incumbent();
    std::vector<int> r;
    search_weight(r, Bits::all(g_.n()), Rational(0));

    found_ = false;
    std::vector<int> r2;
    search_lex(r2, Bits::all(g_.n()), Rational(0));
    while (!lex_.empty() && w_[lex_.back()] == 0) lex_.pop_back();
    return WeightedSet{make_set(lex_, SetKind::independent), best_};
  }

 private:
  Rational greedy_incumbent() const {
    // Heaviest-first greedy; only used to seed pruning.
    std::vector<int> order(g_.n());
    for (int v = 0; v < g_.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return w_[a] > w_[b]; });
    Bits taken(g_.n());
    Rational total(0);
    for (int v : order) {
      if (taken.test(v) || taken.intersects(g_.neighbors(v))) continue;
      taken.set(v);
      total += w_[v];
    }
    return total;
  }

  // Greedy clique cover of p: an independent set meets each clique at most
  // once, so the sum of per-clique maxima bounds the achievable weight.
  Rational bound(const Bits& p) const {
    std::vector<Bits> cliques;
    std::vector<Rational> top;
    for (int v = p.first(); v != -1; v = p.next(v)) {
      bool placed = false;
      for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i].is_subset_of(g_.neighbors(v))) {
          cliques[i].set(v);
          if (w_[v] > top[i]) top[i] = w_[v];
          placed = true;
          break;
        }
      }
      if (!placed) {
        Bits c(g_.n());
        c.set(v);
        cliques.push_back(std::move(c));
        top.push_back(w_[v]);
      }
    }
    Rational total(0);
    for (const Rational& t : top) total += t;
    return total;
  }

  void search_weight(std::vector<int>& r, Bits p, Rational current) {
    if (current > best_) best_ = current;
    if (p.none()) return;
    if (current + bound(p) <= best_) return;
    // Branch on the candidate with the most candidate neighbors.
    int v = -1, deg = -1;
    for (int u = p.first(); u != -1; u = p.next(u)) {
      int c = p.intersection_count(g_.neighbors(u));
      if (c > deg) deg = c, v = u;
    }
    Bits rest = p;
    rest.reset(v);
    r.push_back(v);
    search_weight(r, rest & not_neighbors(v), current + w_[v]);
    r.pop_back();
    search_weight(r, rest, current);
  }

  // Ascending include-first walk; the first set reaching best_ wins.
  void search_lex(std::vector<int>& r, Bits p, Rational current) {
    if (found_) return;
    if (current == best_) {
      lex_ = r;
      found_ = true;
      return;
    }
    if (p.none()) return;
    if (current + bound(p) < best_) return;
    int v = p.first();
    Bits rest = p;
    rest.reset(v);
    r.push_back(v);
    search_lex(r, rest & not_neighbors(v), current + w_[v]);
    r.pop_back();
    if (found_) return;
    search_lex(r, rest, current);
  }

  Bits not_neighbors(int v) const {
    Bits b = Bits::all(g_.n());
    b.subtract(g_.neighbors(v));
    b.reset(v);
    return b;
  }

  const Graph& g_;
  const std::vector<Rational>& w_;
  Rational best_{0};
  std::vector<int> lex_;
  bool found_ = false;
};

void check_weights(const Graph& g, const Labeling& w, const Limits& limits) {
  if (g.n() > limits.exact_search_max_n)
    throw CapabilityError("exact search limited to n <= " +
                          std::to_string(limits.exact_search_max_n));
  if (w.size() != g.n())
    throw std::invalid_argument("labeling size does not match graph order");
  for (const Rational& x : w.values)
    if (x < 0) throw std::invalid_argument("negative vertex weight");
}

}  // namespace

WeightedSet max_weight_independent_set(const Graph& g, const Labeling& w,
                                       const Limits& limits) {
  check_weights(g, w, limits);
  if (g.n() == 0) return {make_set({}, SetKind::independent), Rational(0)};
  return MwisSearch(g, w.values).run();
}

WeightedSet max_weight_clique(const Graph& g, const Labeling& w,
                              const Limits& limits) {
  check_weights(g, w, limits);
  if (g.n() == 0) return {make_set({}, SetKind::clique), Rational(0)};
  WeightedSet res = MwisSearch(complement(g), w.values).run();
  res.set = make_set(std::move(res.set.members), SetKind::clique);
  return res;
}

std::optional<std::vector<int>> find_independent_set_of_size(const Graph& g,
                                                             const Bits& within,
                                                             int k) {
  std::vector<int> r;
  std::vector<int> result;
  bool found = false;
  auto rec = [&](auto&& self, Bits p) -> void {
    if (found) return;
    if (int(r.size()) == k) {
      result = r;
      found = true;
      return;
    }
    if (int(r.size()) + p.count() < k) return;
    int v = p.first();
    if (v == -1) return;
    Bits rest = p;
    rest.reset(v);
    Bits incl = rest;
    incl.subtract(g.neighbors(v));
    r.push_back(v);
    self(self, incl);
    r.pop_back();
    if (!found) self(self, rest);
  };
  rec(rec, within);
  if (!found) return std::nullopt;
  return result;
}

GraphStats stats(const Graph& g, const Limits& limits) {
  GraphStats s;
  s.m = g.m();
  if (g.n() == 0) {
    s.alpha = 0;
    s.omega = 0;
    s.triangle_free = true;
    return s;
  }
  Labeling unit(g.n());
  for (Rational& x : unit.values) x = 1;
  s.alpha = int(max_weight_independent_set(g, unit, limits).set.members.size());
  s.omega = int(max_weight_clique(g, unit, limits).set.members.size());
  s.triangle_free = s.omega <= 2;
  return s;
}

}  // namespace cofrac

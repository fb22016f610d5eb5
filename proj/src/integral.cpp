#include "cofrac/integral.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cofrac/errors.hpp"
#include "cofrac/labeling.hpp"
#include "cofrac/subset_oracle.hpp"

namespace cofrac {

namespace {

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

class ChiSearch {
 public:
  ChiSearch(const Graph& g, int upper, int lower)
      : g_(g), order_(degree_order(g)), color_(g.n(), -1),
        best_(upper), lower_(lower) {}

  int run() {
    dfs(0, 0);
    return best_;
  }

 private:
  void dfs(int i, int used) {
    if (best_ == lower_) return;
    if (used >= best_) return;
    if (i == g_.n()) {
      best_ = used;
      return;
    }
    int v = order_[i];
    for (int c = 0; c < used; ++c) {
      bool open = true;
      for (int u : g_.neighbors(v).to_vector())
        if (color_[u] == c) {
          open = false;
          break;
        }
      if (!open) continue;
      color_[v] = c;
      dfs(i + 1, used);
      color_[v] = -1;
    }
    if (used + 1 < best_) {
      color_[v] = used;
      dfs(i + 1, used + 1);
      color_[v] = -1;
    }
  }

  const Graph& g_;
  std::vector<int> order_;
  std::vector<int> color_;
  int best_;
  int lower_;
};

// Maximal cliques of the graph induced on mask, as bitmasks.
void mask_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t r,
                  std::uint64_t p, std::uint64_t x,
                  std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  std::uint64_t both = p | x;
  int pivot = -1, best = -1;
  for (std::uint64_t w = both; w;) {
    int u = std::countr_zero(w);
    w &= w - 1;
    int c = std::popcount(p & adj[u]);
    if (c > best) best = c, pivot = u;
  }
  std::uint64_t ext = p & ~adj[pivot];
  while (ext) {
    int v = std::countr_zero(ext);
    ext &= ext - 1;
    std::uint64_t bit = std::uint64_t(1) << v;
    mask_cliques(adj, r | bit, p & adj[v], x & adj[v], out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace

int integral_chi(const Graph& g, const Limits& limits) {
  if (g.n() > limits.integral_chi_max_n)
    throw CapabilityError("chromatic number limited to n <= " +
                          std::to_string(limits.integral_chi_max_n));
  if (g.n() == 0) return 0;
  Labeling unit(g.n());
  for (Rational& x : unit.values) x = 1;
  int lower = int(max_weight_clique(g, unit, limits).set.members.size());
  int upper = greedy_coloring_bound(g);
  if (upper == lower) return upper;
  return ChiSearch(g, upper, lower).run();
}

int integral_z(const Graph& g, const Limits& limits) {
  if (g.n() > limits.integral_z_max_n)
    throw CapabilityError("cochromatic number limited to n <= " +
                          std::to_string(limits.integral_z_max_n));
  int n = g.n();
  if (n == 0) return 0;
  std::vector<std::uint64_t> adj(n), coadj(n);
  std::uint64_t full = n == 64 ? ~std::uint64_t(0)
                               : (std::uint64_t(1) << n) - 1;
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v).to_vector()) adj[v] |= std::uint64_t(1) << u;
    coadj[v] = full & ~adj[v] & ~(std::uint64_t(1) << v);
  }
  std::unordered_map<std::uint64_t, int> memo;
  auto rec = [&](auto&& self, std::uint64_t mask) -> int {
    if (mask == 0) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    int v = std::countr_zero(mask);
    std::uint64_t bit = std::uint64_t(1) << v;
    // Parts through v can be assumed maximal within the remainder, so both
    // candidate families are enumerated on the induced subgraph.
    std::vector<std::uint64_t> parts;
    mask_cliques(adj, bit, mask & adj[v], 0, parts);
    mask_cliques(coadj, bit, mask & coadj[v], 0, parts);
    int best = n;
    for (std::uint64_t part : parts)
      best = std::min(best, 1 + self(self, mask & ~part));
    memo.emplace(mask, best);
    return best;
  };
  return rec(rec, full);
}

int greedy_coloring_bound(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  int used = 0;
  for (int v : degree_order(g)) {
    std::vector<char> taken(used + 1, 0);
    for (int u : g.neighbors(v).to_vector())
      if (color[u] != -1) taken[color[u]] = 1;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

}  // namespace cofrac

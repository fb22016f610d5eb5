#include "cofrac/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cofrac/errors.hpp"
#include "cofrac/rng.hpp"

namespace cofrac {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges,
             std::optional<Provenance> provenance, bool vertex_transitive)
    : n_(n), provenance_(std::move(provenance)), transitive_(vertex_transitive) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n, Bits(n));
  for (auto [u, v] : edges_) {
    adj_[u].set(v);
    adj_[v].set(u);
  }
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

bool parse_two_ints(const std::string& s, long& a, long& b) {
  std::istringstream in(s);
  std::string tail;
  if (!(in >> a >> b)) return false;
  if (in >> tail) return false;
  return true;
}

Graph parse_dimacs(const std::vector<std::string>& lines) {
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int lineno = int(i) + 1;
    const std::string& line = lines[i];
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "p") {
      std::string fmt;
      if (!(in >> fmt >> n >> m) || (fmt != "edge" && fmt != "col"))
        throw ParseError(lineno, "malformed problem line");
    } else if (tag == "e") {
      if (n < 0) throw ParseError(lineno, "edge before problem line");
      long u, v;
      if (!(in >> u >> v)) throw ParseError(lineno, "malformed edge line");
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(lineno, "endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      edges.emplace_back(int(u) - 1, int(v) - 1);
    } else {
      throw ParseError(lineno, "unrecognized line");
    }
  }
  if (n < 0) throw ParseError("missing DIMACS problem line");
  return Graph(int(n), std::move(edges), Provenance{"parsed", {}});
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string> lines = split_lines(text);
  for (const std::string& line : lines) {
    if (line.empty()) continue;
    if (line[0] == 'c' || line[0] == 'p') return parse_dimacs(lines);
    break;
  }
  // Edge-list format: "n m" header, then m lines "u v", 0-based ids.
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size()) throw ParseError("empty input");
  long n, m;
  if (!parse_two_ints(lines[i], n, m) || n < 0 || m < 0)
    throw ParseError(int(i) + 1, "malformed header, expected \"n m\"");
  std::vector<std::pair<int, int>> edges;
  long seen = 0;
  for (++i; i < lines.size(); ++i) {
    int lineno = int(i) + 1;
    if (lines[i].empty()) continue;
    long u, v;
    if (!parse_two_ints(lines[i], u, v))
      throw ParseError(lineno, "malformed edge line");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(lineno, "endpoint out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    edges.emplace_back(int(u), int(v));
    ++seen;
  }
  if (seen != m)
    throw ParseError("header announced " + std::to_string(m) + " edges, found " +
                     std::to_string(seen));
  return Graph(int(n), std::move(edges), Provenance{"parsed", {}});
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), std::move(edges), std::nullopt,
               g.vertex_transitive_by_construction());
}

Graph disjoint_union(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("disjoint_union requires k >= 1");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(std::size_t(k) * g.m());
  for (int copy = 0; copy < k; ++copy)
    for (auto [u, v] : g.edges())
      edges.emplace_back(copy * g.n() + u, copy * g.n() + v);
  return Graph(k * g.n(), std::move(edges),
               Provenance{"disjoint-union", {std::to_string(k)}});
}

Graph gen_complete(int n) {
  if (n < 0) throw std::invalid_argument("negative order");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges), Provenance{"complete", {std::to_string(n)}},
               true);
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges), Provenance{"cycle", {std::to_string(n)}},
               true);
}

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("path requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges), Provenance{"path", {std::to_string(n)}});
}

Graph gen_star(int t, int s) {
  if (t < 1) throw std::invalid_argument("star requires t >= 1");
  if (s < 0) throw std::invalid_argument("negative isolated-vertex count");
  std::vector<std::pair<int, int>> edges;
  for (int leaf = 1; leaf <= t; ++leaf) edges.emplace_back(0, leaf);
  Provenance prov{s == 0 ? "star" : "star-plus-isolated",
                  {std::to_string(t), std::to_string(s)}};
  return Graph(1 + t + s, std::move(edges), std::move(prov));
}

Graph gen_kneser(int a, int b) {
  if (b < 1 || b > a) throw std::invalid_argument("kneser requires 1 <= b <= a");
  // b-subsets of {1..a} in lexicographic order.
  std::vector<std::uint64_t> subsets;
  std::vector<int> pick(b);
  for (int i = 0; i < b; ++i) pick[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : pick) mask |= std::uint64_t(1) << i;
    subsets.push_back(mask);
    int i = b - 1;
    while (i >= 0 && pick[i] == a - b + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < b; ++j) pick[j] = pick[j - 1] + 1;
    if (subsets.size() > 100000) throw CapabilityError("kneser graph too large");
  }
  int n = int(subsets.size());
  if (n > 4096) throw CapabilityError("kneser graph too large");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((subsets[u] & subsets[v]) == 0) edges.emplace_back(u, v);
  return Graph(n, std::move(edges),
               Provenance{"kneser", {std::to_string(a), std::to_string(b)}},
               true);
}

Graph gen_mycielski(const Graph& g) {
  int n = g.n();
  std::vector<std::pair<int, int>> edges(g.edges());
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u + n, v);   // shadow of u to neighbors of u
    edges.emplace_back(v + n, u);
  }
  for (int v = 0; v < n; ++v) edges.emplace_back(2 * n, v + n);
  Provenance prov{"mycielski", {}};
  if (g.provenance()) {
    prov.params.push_back(g.provenance()->family);
    for (const std::string& p : g.provenance()->params) prov.params.push_back(p);
  }
  return Graph(2 * n + 1, std::move(edges), std::move(prov));
}

Graph gen_random(int n, const Rational& p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random graph requires n >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability outside [0,1]");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges),
               Provenance{"random",
                          {std::to_string(n), to_string(p), std::to_string(seed)}});
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> position(g.n(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex out of range");
    if (position[v] != -1) throw std::invalid_argument("duplicate vertex");
    if (i > 0 && keep[i - 1] >= v)
      throw std::invalid_argument("vertex list must be strictly increasing");
    position[v] = int(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (position[u] != -1 && position[v] != -1)
      edges.emplace_back(position[u], position[v]);
  return Graph(int(keep.size()), std::move(edges));
}

}  // namespace cofrac

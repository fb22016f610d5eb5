#include "cofrac/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cofrac/errors.hpp"

namespace cofrac {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational as_rational(const Json& j, const char* what) {
  try {
    return parse_rational(as_string(j, what));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string_view parameter_name(Parameter p) {
  return p == Parameter::chi_f ? "chi_f" : "z_f";
}

std::string_view method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::enumeration:
      return "enumeration";
    case SolveMethod::column_generation:
      return "column-generation";
    default:
      return "auto";
  }
}

std::string_view kind_name(SetKind k) {
  return k == SetKind::clique ? "clique" : "independent";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::exception:
      return "exception";
    case Verdict::fails:
      return "fails";
    default:
      return "not_applicable";
  }
}

Json to_json(const VertexSet& set) {
  return Json{{"kind", kind_name(set.kind)}, {"members", set.members}};
}

Json to_json(const FractionalCover& cover) {
  Json arr = Json::array();
  for (const CoverEntry& e : cover.entries) {
    Json entry = to_json(e.set);
    entry["weight"] = to_string(e.weight);
    arr.push_back(std::move(entry));
  }
  return arr;
}

Json to_json(const CertifiedValue& cv) {
  Json dual = Json::object();
  for (int v = 0; v < cv.dual.size(); ++v)
    dual[std::to_string(v)] = to_string(cv.dual[v]);
  return Json{{"parameter", parameter_name(cv.parameter)},
              {"value", to_string(cv.value)},
              {"cover", to_json(cv.cover)},
              {"dual", std::move(dual)},
              {"method", method_name(cv.stats.method_used)}};
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  Json prov;
  if (g.provenance())
    prov = Json{{"family", g.provenance()->family},
                {"params", g.provenance()->params}};
  return Json{{"n", g.n()},
              {"m", g.m()},
              {"edges", std::move(edges)},
              {"provenance", std::move(prov)},
              {"vertex_transitive", g.vertex_transitive_by_construction()}};
}

Json to_json(const TheoremReport& report) {
  Json prov;
  if (report.graph)
    prov = Json{{"family", report.graph->family},
                {"params", report.graph->params}};
  Json q = Json::object();
  for (const auto& [key, value] : report.quantities) q[key] = value;
  return Json{{"theorem", report.theorem_id},
              {"graph", std::move(prov)},
              {"quantities", std::move(q)},
              {"verdict", verdict_name(report.verdict)},
              {"detail", report.detail}};
}

Json to_json(const RamseyConversionTrace& trace) {
  return Json{{"k", trace.k},
              {"R", trace.R},
              {"partition_sizes", trace.partition_sizes},
              {"s", trace.s},
              {"residues", trace.residues},
              {"input_weight", to_string(trace.input_weight)},
              {"output_weight", to_string(trace.output_weight)}};
}

Json to_json(const Remark6Report& report) {
  return Json{{"experiment", "remark6"},
              {"n", report.n},
              {"seed", report.seed},
              {"alpha", report.alpha},
              {"omega", report.omega},
              {"lower", to_string(report.lower)},
              {"z_f", to_string(report.zf)},
              {"chi_greedy", report.chi_greedy},
              {"reference", report.reference},
              {"sandwich_ok", report.sandwich_ok}};
}

Json to_json(const GapReport& report) {
  return Json{{"experiment", "gap"},
              {"n", report.n},
              {"eps", to_string(report.eps)},
              {"seed", report.seed},
              {"p", to_string(report.p)},
              {"alpha", report.alpha},
              {"chi_complement", report.chi_complement},
              {"chi_f", to_string(report.chi_f_value)},
              {"z_f", to_string(report.z_f_value)},
              {"lhs", to_string(report.lhs)},
              {"rhs", to_string(report.rhs)},
              {"holds", report.holds}};
}

Json to_json(const NmSearchResult& result) {
  return Json{{"experiment", "nm-search"},
              {"best", to_string(result.best)},
              {"evaluated", result.evaluated},
              {"witness", to_json(result.witness)}};
}

Json to_json(const AksSample& sample) {
  return Json{{"experiment", "aks"},
              {"v1", sample.v1},
              {"v1_empty", sample.v1_empty},
              {"h", to_json(sample.h)},
              {"z_f_h", to_json(sample.zf_h)}};
}

CertifiedValue certified_value_from_json(const Json& j) {
  CertifiedValue cv;
  std::string param = as_string(field(j, "parameter"), "parameter");
  if (param == "chi_f")
    cv.parameter = Parameter::chi_f;
  else if (param == "z_f")
    cv.parameter = Parameter::z_f;
  else
    throw ParseError("unknown parameter \"" + param + "\"");
  cv.value = as_rational(field(j, "value"), "value");

  const Json& cover = field(j, "cover");
  if (!cover.is_array()) throw ParseError("cover must be an array");
  cv.cover.mode = mode_for(cv.parameter);
  for (const Json& entry : cover) {
    std::string kind = as_string(field(entry, "kind"), "kind");
    if (kind != "clique" && kind != "independent")
      throw ParseError("unknown set kind \"" + kind + "\"");
    const Json& members = field(entry, "members");
    if (!members.is_array()) throw ParseError("members must be an array");
    VertexSet set;
    for (const Json& m : members) set.members.push_back(as_int(m, "member"));
    std::sort(set.members.begin(), set.members.end());
    set.members.erase(std::unique(set.members.begin(), set.members.end()),
                      set.members.end());
    set.kind = kind == "clique" && set.members.size() > 1 ? SetKind::clique
                                                          : SetKind::independent;
    cv.cover.entries.push_back(
        {std::move(set), as_rational(field(entry, "weight"), "weight")});
  }

  const Json& dual = field(j, "dual");
  if (!dual.is_object()) throw ParseError("dual must be an object");
  cv.dual = Labeling(int(dual.size()));
  std::vector<char> seen(dual.size(), 0);
  for (const auto& [key, value] : dual.items()) {
    int v;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("dual key \"" + key + "\" is not a vertex id");
    }
    if (v < 0 || v >= cv.dual.size() || seen[v])
      throw ParseError("dual keys must cover 0.." +
                       std::to_string(cv.dual.size() - 1) + " exactly once");
    seen[v] = 1;
    cv.dual[v] = as_rational(value, "dual value");
  }

  std::string method = as_string(field(j, "method"), "method");
  if (method == "enumeration")
    cv.stats.method_used = SolveMethod::enumeration;
  else if (method == "column-generation")
    cv.stats.method_used = SolveMethod::column_generation;
  else
    throw ParseError("unknown method \"" + method + "\"");
  return cv;
}

Graph graph_from_json(const Json& j) {
  int n = as_int(field(j, "n"), "n");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  std::vector<std::pair<int, int>> list;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("each edge must be a pair [u, v]");
    list.emplace_back(as_int(e[0], "endpoint"), as_int(e[1], "endpoint"));
  }
  std::optional<Provenance> prov;
  if (auto it = j.find("provenance"); it != j.end() && it->is_object()) {
    Provenance p;
    p.family = as_string(field(*it, "family"), "family");
    for (const Json& s : field(*it, "params"))
      p.params.push_back(as_string(s, "param"));
    prov = std::move(p);
  }
  bool transitive = false;
  if (auto it = j.find("vertex_transitive"); it != j.end() && it->is_boolean())
    transitive = it->get<bool>();
  try {
    Graph g(n, std::move(list), std::move(prov), transitive);
    if (auto it = j.find("m"); it != j.end() && as_int(*it, "m") != g.m())
      throw ParseError("m does not match the edge list");
    return g;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Graph parse_graph_any(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  if (i < text.size() && text[i] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(e.what());
    }
    return graph_from_json(j);
  }
  return parse_graph(text);
}

}  // namespace cofrac

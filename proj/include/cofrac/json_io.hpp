#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "cofrac/graph.hpp"
#include "cofrac/solver.hpp"
#include "cofrac/theorems.hpp"

namespace cofrac {

// Insertion order is preserved so every serializer below emits a fixed key
// order; with fixed rational strings this makes output byte-identical for
// identical inputs.
using Json = nlohmann::ordered_json;

std::string_view parameter_name(Parameter p);
std::string_view method_name(SolveMethod m);
std::string_view kind_name(SetKind k);
std::string_view verdict_name(Verdict v);

Json to_json(const VertexSet& set);
Json to_json(const FractionalCover& cover);
// {"parameter", "value", "cover", "dual", "method"}; solve statistics are
// deliberately left out so output depends only on the input.
Json to_json(const CertifiedValue& cv);
Json to_json(const Graph& g);
Json to_json(const TheoremReport& report);
Json to_json(const RamseyConversionTrace& trace);
Json to_json(const Remark6Report& report);
Json to_json(const GapReport& report);
Json to_json(const NmSearchResult& result);
Json to_json(const AksSample& sample);

// Ingest of externally supplied JSON. Structural problems throw ParseError;
// semantic problems (an infeasible cover, a wrong value) are left for
// verify_cover/verify_labeling/audit so they surface as verification
// failures, not parse errors. Member lists are sorted and deduplicated, and
// sets of size <= 1 are normalized to kind "independent".
CertifiedValue certified_value_from_json(const Json& j);
Graph graph_from_json(const Json& j);

// Graph text in any accepted format: a JSON object (first non-space byte
// '{'), else the edge-list / DIMACS reader.
Graph parse_graph_any(std::string_view text);

}  // namespace cofrac

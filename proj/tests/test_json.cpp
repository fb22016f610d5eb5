#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "cofrac/errors.hpp"
#include "cofrac/json_io.hpp"

using namespace cofrac;

TEST_CASE("certificate serialization follows the key contract") {
  CertifiedValue cv = z_f(gen_star(3, 0));
  Json j = to_json(cv);
  std::string dumped = j.dump();
  CHECK(dumped.rfind("{\"parameter\":\"z_f\",\"value\":\"5/3\",\"cover\":",
                     0) == 0);
  CHECK(j["dual"].size() == 4);
  CHECK(j["method"] == "enumeration");
  for (const Json& entry : j["cover"]) {
    CHECK(entry.contains("kind"));
    CHECK(entry.contains("members"));
    CHECK(entry.contains("weight"));
  }
}

TEST_CASE("serialization is byte stable across runs") {
  Graph g = gen_random(9, ratio(1, 2), 55);
  CHECK(to_json(z_f(g)).dump() == to_json(z_f(g)).dump());
  CHECK(to_json(chi_f(g)).dump() == to_json(chi_f(g)).dump());
  CHECK(to_json(g).dump() == to_json(g).dump());
}

TEST_CASE("certificate round trip re-audits") {
  Graph g = gen_cycle(7);
  CertifiedValue cv = chi_f(g);
  CertifiedValue back = certified_value_from_json(to_json(cv));
  CHECK(back.parameter == cv.parameter);
  CHECK(back.value == cv.value);
  CHECK(back.cover.entries.size() == cv.cover.entries.size());
  CHECK(audit(g, back).ok);

  CertifiedValue z = z_f(gen_star(3, 1));
  CHECK(audit(gen_star(3, 1), certified_value_from_json(to_json(z))).ok);
}

TEST_CASE("tampered certificates fail verification, not parsing") {
  Graph g = gen_cycle(5);
  Json j = to_json(chi_f(g));
  j["cover"][0]["weight"] = "1/4";
  CertifiedValue cv = certified_value_from_json(j);
  VerifyResult r = audit(g, cv);
  CHECK(!r.ok);
  CHECK(!r.detail.empty());
}

TEST_CASE("malformed certificates throw parse errors") {
  Graph g = gen_cycle(5);
  Json good = to_json(chi_f(g));

  Json missing = good;
  missing.erase("dual");
  CHECK_THROWS_AS(certified_value_from_json(missing), ParseError);

  Json bad_rational = good;
  bad_rational["value"] = "5//2";
  CHECK_THROWS_AS(certified_value_from_json(bad_rational), ParseError);

  Json bad_param = good;
  bad_param["parameter"] = "chi";
  CHECK_THROWS_AS(certified_value_from_json(bad_param), ParseError);

  Json bad_dual = good;
  bad_dual["dual"] = Json{{"0", "1/2"}, {"7", "1/2"}};
  CHECK_THROWS_AS(certified_value_from_json(bad_dual), ParseError);

  Json bad_method = good;
  bad_method["method"] = "simplex";
  CHECK_THROWS_AS(certified_value_from_json(bad_method), ParseError);

  Json bad_kind = good;
  bad_kind["cover"][0]["kind"] = "path";
  CHECK_THROWS_AS(certified_value_from_json(bad_kind), ParseError);
}

TEST_CASE("ingest normalizes member lists and singleton kinds") {
  Json j = Json{{"parameter", "z_f"},
                {"value", "1"},
                {"cover", Json::array({Json{{"kind", "clique"},
                                            {"members", Json::array({2, 0, 1, 1})},
                                            {"weight", "1"}}})},
                {"dual", Json{{"0", "1"}, {"1", "0"}, {"2", "0"}}},
                {"method", "enumeration"}};
  CertifiedValue cv = certified_value_from_json(j);
  CHECK(cv.cover.entries[0].set.members == std::vector<int>{0, 1, 2});
  CHECK(cv.cover.entries[0].set.kind == SetKind::clique);

  Json single = j;
  single["cover"][0]["members"] = Json::array({1});
  CHECK(certified_value_from_json(single).cover.entries[0].set.kind ==
        SetKind::independent);
}

TEST_CASE("graph json round trip") {
  Graph g = gen_kneser(5, 2);
  Json j = to_json(g);
  CHECK(j["n"] == 10);
  CHECK(j["m"] == 15);
  CHECK(j["provenance"]["family"] == "kneser");
  CHECK(j["vertex_transitive"] == true);
  Graph back = graph_from_json(j);
  CHECK(back == g);
  CHECK(back.vertex_transitive_by_construction());
  REQUIRE(back.provenance().has_value());
  CHECK(back.provenance()->family == "kneser");
}

TEST_CASE("graph json rejects malformed input") {
  CHECK_THROWS_AS(graph_from_json(Json{{"n", 2}}), ParseError);
  CHECK_THROWS_AS(graph_from_json(Json{{"n", 2}, {"edges", "nope"}}),
                  ParseError);
  CHECK_THROWS_AS(
      graph_from_json(Json{{"n", 2}, {"edges", Json::array({Json::array({0})})}}),
      ParseError);
  CHECK_THROWS_AS(
      graph_from_json(Json{
          {"n", 2}, {"m", 5}, {"edges", Json::array({Json::array({0, 1})})}}),
      ParseError);
  CHECK_THROWS_AS(
      graph_from_json(Json{
          {"n", 1}, {"edges", Json::array({Json::array({0, 1})})}}),
      ParseError);
}

TEST_CASE("parse_graph_any sniffs the format") {
  Graph g = gen_cycle(5);
  CHECK(parse_graph_any(to_json(g).dump()) == g);
  CHECK(parse_graph_any(to_edge_list(g)) == g);
  CHECK(parse_graph_any("  \n {\"n\": 1, \"edges\": []}") == Graph(1, {}));
  CHECK_THROWS_AS(parse_graph_any("{broken"), ParseError);
}

TEST_CASE("report serialization shape") {
  TheoremReport rep = check_example1(3, 0);
  Json j = to_json(rep);
  CHECK(j["theorem"] == "example1");
  CHECK(j["verdict"] == "holds");
  CHECK(j["quantities"]["z_f"] == "5/3");
  std::string dumped = j.dump();
  CHECK(dumped.rfind("{\"theorem\":", 0) == 0);
}

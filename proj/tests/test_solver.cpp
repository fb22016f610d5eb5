#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "cofrac/errors.hpp"
#include "cofrac/rng.hpp"
#include "cofrac/solver.hpp"

using namespace cofrac;

namespace {

void expect_certified(const Graph& g, const CertifiedValue& cv,
                      const Rational& want) {
  CHECK(cv.value == want);
  CHECK(cv.cover.total_weight() == want);
  CHECK(cv.dual.weight() == want);
  VerifyResult a = audit(g, cv);
  INFO(a.detail);
  CHECK(a.ok);
}

}  // namespace

TEST_CASE("fractional chromatic numbers of known graphs") {
  expect_certified(gen_complete(4), chi_f(gen_complete(4)), 4);
  expect_certified(gen_complete(1), chi_f(gen_complete(1)), 1);
  expect_certified(gen_cycle(5), chi_f(gen_cycle(5)), ratio(5, 2));
  expect_certified(gen_cycle(7), chi_f(gen_cycle(7)), ratio(7, 3));
  expect_certified(gen_cycle(6), chi_f(gen_cycle(6)), 2);
  expect_certified(gen_kneser(5, 2), chi_f(gen_kneser(5, 2)), ratio(5, 2));
  expect_certified(gen_star(4, 0), chi_f(gen_star(4, 0)), 2);
  Graph grotzsch = gen_mycielski(gen_cycle(5));
  expect_certified(grotzsch, chi_f(grotzsch), ratio(29, 10));
  expect_certified(Graph(5, {}), chi_f(Graph(5, {})), 1);
}

TEST_CASE("fractional cochromatic numbers of known graphs") {
  expect_certified(gen_complete(7), z_f(gen_complete(7)), 1);
  expect_certified(gen_cycle(5), z_f(gen_cycle(5)), ratio(5, 2));
  expect_certified(gen_kneser(5, 2), z_f(gen_kneser(5, 2)), ratio(5, 2));
  expect_certified(gen_star(3, 0), z_f(gen_star(3, 0)), ratio(5, 3));
  expect_certified(gen_star(1, 0), z_f(gen_star(1, 0)), 1);
  expect_certified(gen_star(3, 2), z_f(gen_star(3, 2)), ratio(7, 4));
  expect_certified(Graph(5, {}), z_f(Graph(5, {})), 1);
}

TEST_CASE("cocoloring never beats coloring and respects the clique bound") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = gen_random(8, ratio(1, 2), rng.next());
    CertifiedValue chi = chi_f(g);
    CertifiedValue z = z_f(g);
    CHECK(z.value <= chi.value);
    CHECK(z.value >= 1);
  }
}

TEST_CASE("empty graph solves to zero with empty certificates") {
  Graph empty(0, {});
  CertifiedValue cv = chi_f(empty);
  CHECK(cv.value == 0);
  CHECK(cv.cover.entries.empty());
  CHECK(cv.dual.size() == 0);
  CHECK(audit(empty, cv).ok);
  CHECK(z_f(empty).value == 0);
}

TEST_CASE("methods agree exactly") {
  std::vector<Graph> corpus = {gen_cycle(5), gen_cycle(7), gen_star(3, 2),
                               gen_kneser(5, 2), gen_path(6)};
  SplitMix64 rng(23);
  for (int trial = 0; trial < 10; ++trial)
    corpus.push_back(gen_random(9, ratio(1, 2), rng.next()));
  for (const Graph& g : corpus) {
    MethodComparison cmp = cross_check(g);
    CHECK(cmp.chi_enumerated.value == cmp.chi_priced.value);
    CHECK(cmp.z_enumerated.value == cmp.z_priced.value);
    CHECK(cmp.chi_enumerated.stats.method_used == SolveMethod::enumeration);
    CHECK(cmp.chi_priced.stats.method_used == SolveMethod::column_generation);
  }
}

TEST_CASE("cover entries are sorted positive and mode consistent") {
  CertifiedValue cv = z_f(gen_kneser(5, 2));
  CHECK(cv.cover.mode == CoverMode::cocoloring);
  for (std::size_t i = 0; i < cv.cover.entries.size(); ++i) {
    CHECK(cv.cover.entries[i].weight > 0);
    if (i > 0) CHECK(cv.cover.entries[i - 1].set < cv.cover.entries[i].set);
  }
  CertifiedValue chi = chi_f(gen_cycle(7));
  CHECK(chi.cover.mode == CoverMode::coloring);
  for (const CoverEntry& e : chi.cover.entries)
    CHECK(e.set.kind == SetKind::independent);
}

TEST_CASE("verify_cover catches broken covers") {
  Graph g = gen_cycle(5);
  CertifiedValue cv = chi_f(g);
  REQUIRE(verify_cover(g, cv.cover).ok);

  FractionalCover halved = cv.cover;
  halved.entries[0].weight /= 2;
  VerifyResult r = verify_cover(g, halved);
  CHECK(!r.ok);
  CHECK(r.detail.find("covered") != std::string::npos);

  FractionalCover bad_kind = cv.cover;
  bad_kind.entries[0].set.kind = SetKind::clique;
  CHECK(!verify_cover(g, bad_kind).ok);

  FractionalCover not_a_set = cv.cover;
  not_a_set.entries[0].set.members = {0, 1};
  not_a_set.entries[0].set.kind = SetKind::independent;
  CHECK(!verify_cover(g, not_a_set).ok);

  FractionalCover negative = cv.cover;
  negative.entries[0].weight = ratio(-1, 2);
  CHECK(!verify_cover(g, negative).ok);
}

TEST_CASE("verify_labeling catches infeasible labelings") {
  Graph g = gen_cycle(5);
  CertifiedValue cv = chi_f(g);
  REQUIRE(verify_labeling(g, cv.dual, CoverMode::coloring).ok);

  Labeling inflated = cv.dual;
  inflated[0] += 1;
  VerifyResult r = verify_labeling(g, inflated, CoverMode::coloring);
  CHECK(!r.ok);
  CHECK(r.detail.find("weight") != std::string::npos);

  Labeling wrong_size(4);
  CHECK(!verify_labeling(g, wrong_size, CoverMode::coloring).ok);

  Labeling negative = cv.dual;
  negative[2] = ratio(-1, 5);
  CHECK_THROWS_AS(verify_labeling(g, negative, CoverMode::coloring),
                  std::invalid_argument);
}

TEST_CASE("cocoloring labelings must also pack cliques") {
  // All-ones on K_3 is a fine color labeling but packs the triangle to 3.
  Graph k3 = gen_complete(3);
  Labeling ones(3);
  for (int v = 0; v < 3; ++v) ones[v] = 1;
  CHECK(verify_labeling(k3, ones, CoverMode::coloring).ok);
  CHECK(!verify_labeling(k3, ones, CoverMode::cocoloring).ok);
}

TEST_CASE("audit rejects a certificate pasted onto the wrong claim") {
  Graph g = gen_cycle(5);
  CertifiedValue cv = chi_f(g);
  CertifiedValue wrong = cv;
  wrong.value += 1;
  CHECK(!audit(g, wrong).ok);

  CertifiedValue swapped = cv;
  swapped.parameter = Parameter::z_f;
  CHECK(!audit(g, swapped).ok);
}

TEST_CASE("enumeration refuses past its vertex limit") {
  Graph big = gen_random(25, ratio(1, 4), 5);
  CHECK_THROWS_AS(chi_f(big, SolveMethod::enumeration), CapabilityError);
  CertifiedValue cv = chi_f(big, SolveMethod::column_generation);
  CHECK(audit(big, cv).ok);
  CHECK(cv.value >= 1);
}

TEST_CASE("automatic method switches on size") {
  CHECK(chi_f(gen_cycle(5)).stats.method_used == SolveMethod::enumeration);
  Graph big = gen_random(25, ratio(1, 4), 6);
  CHECK(chi_f(big).stats.method_used == SolveMethod::column_generation);
}

TEST_CASE("column cap surfaces as a capability error") {
  Limits tiny;
  tiny.lp_max_columns = 3;
  CHECK_THROWS_AS(chi_f(gen_cycle(5), SolveMethod::column_generation, tiny),
                  CapabilityError);
}

TEST_CASE("identical runs give identical certificates") {
  Graph g = gen_random(10, ratio(1, 2), 77);
  CertifiedValue a = z_f(g);
  CertifiedValue b = z_f(g);
  CHECK(a.value == b.value);
  REQUIRE(a.cover.entries.size() == b.cover.entries.size());
  for (std::size_t i = 0; i < a.cover.entries.size(); ++i) {
    CHECK(a.cover.entries[i].set == b.cover.entries[i].set);
    CHECK(a.cover.entries[i].weight == b.cover.entries[i].weight);
  }
  for (int v = 0; v < 10; ++v) CHECK(a.dual[v] == b.dual[v]);
}

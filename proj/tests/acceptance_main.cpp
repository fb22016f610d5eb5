// Acceptance gate: every release-blocking behavior, one pass/fail line each,
// wall-clock budgets enforced per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cofrac/errors.hpp"
#include "cofrac/integral.hpp"
#include "cofrac/rng.hpp"
#include "cofrac/solver.hpp"
#include "cofrac/theorems.hpp"

using namespace cofrac;

namespace {

struct Failure {
  std::string message;
};

#define REQUIRE(cond)                                                       \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::ostringstream os_;                                               \
      os_ << __FILE__ << ":" << __LINE__ << " requirement failed: " #cond;  \
      throw Failure{os_.str()};                                             \
    }                                                                       \
  } while (0)

#define REQUIRE_MSG(cond, extra)                                            \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::ostringstream os_;                                               \
      os_ << __FILE__ << ":" << __LINE__ << " " << extra;                   \
      throw Failure{os_.str()};                                             \
    }                                                                       \
  } while (0)

int failures = 0;

void run_criterion(int number, const std::string& label, double budget_s,
                   const std::function<std::string()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string note;
  std::string error;
  try {
    note = body();
  } catch (const Failure& f) {
    error = f.message;
  } catch (const std::exception& e) {
    error = std::string("unexpected exception: ") + e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (error.empty() && elapsed > budget_s) {
    std::ostringstream os;
    os << "over budget (" << budget_s << "s)";
    error = os.str();
  }
  if (error.empty()) {
    std::printf("[PASS] criterion %2d: %s (%.1fs of %.0fs)%s%s\n", number,
                label.c_str(), elapsed, budget_s, note.empty() ? "" : " ",
                note.c_str());
  } else {
    ++failures;
    std::printf("[FAIL] criterion %2d: %s (%.1fs of %.0fs) %s\n", number,
                label.c_str(), elapsed, budget_s, error.c_str());
  }
  std::fflush(stdout);
}

// Shared seeded corpus for the duality and cross-validation criteria.
std::vector<Graph> random_suite() {
  std::vector<Graph> out;
  SplitMix64 stream(8675309);
  for (int i = 0; i < 200; ++i) {
    int n = 4 + int(stream.below(9));
    out.push_back(gen_random(n, ratio(1, 2), stream.next()));
  }
  return out;
}

std::string criterion_star_values() {
  for (int t = 1; t <= 6; ++t) {
    CertifiedValue cv = z_f(gen_star(t, 0));
    REQUIRE_MSG(cv.value == Rational(2) - ratio(1, t),
                "Z_f(K_{1," << t << "}) = " << to_string(cv.value));
    REQUIRE(audit(gen_star(t, 0), cv).ok);
  }
  for (int t = 1; t <= 4; ++t)
    for (int s = 1; s <= 3; ++s) {
      CertifiedValue cv = z_f(gen_star(t, s));
      REQUIRE_MSG(cv.value == Rational(2) - ratio(1, t + 1),
                  "star t=" << t << " s=" << s << " gave "
                            << to_string(cv.value));
      REQUIRE(check_example1(t, s).verdict == Verdict::holds);
    }
  return "";
}

std::string criterion_transitive_bound() {
  Graph petersen = gen_kneser(5, 2);
  CertifiedValue cv = z_f(petersen);
  REQUIRE(cv.value == ratio(5, 2));
  REQUIRE(audit(petersen, cv).ok);
  GraphStats st = stats(petersen);
  REQUIRE(st.alpha == 4);
  REQUIRE(st.omega == 2);
  REQUIRE(cv.value == ratio(petersen.n(), std::max(st.alpha, st.omega)));
  REQUIRE(petersen.vertex_transitive_by_construction());
  REQUIRE(check_proposition1(petersen).verdict == Verdict::holds);

  Graph star = gen_star(3, 0);
  CertifiedValue sv = z_f(star);
  REQUIRE(sv.value == ratio(5, 3));
  REQUIRE(sv.value > ratio(4, 3));  // strict slack off the bound
  REQUIRE(check_proposition1(star).verdict == Verdict::holds);
  return "";
}

std::string criterion_union_collapse() {
  Rational chi_c5 = chi_f(gen_cycle(5)).value;
  CertifiedValue two_c5 = z_f(disjoint_union(gen_cycle(5), 2));
  REQUIRE(two_c5.value == ratio(5, 2));
  REQUIRE(two_c5.value == chi_c5);
  REQUIRE(chi_f(disjoint_union(gen_cycle(5), 2)).value == ratio(5, 2));
  REQUIRE(z_f(disjoint_union(gen_complete(3), 3)).value == 3);
  REQUIRE(check_theorem5(gen_cycle(5), 2).verdict == Verdict::holds);
  REQUIRE(check_theorem5(gen_complete(3), 3).verdict == Verdict::holds);
  return "";
}

std::string criterion_triangle_free_sweep() {
  for (const Graph& g :
       {gen_cycle(5), gen_cycle(7), gen_kneser(5, 2),
        gen_mycielski(gen_cycle(5))})
    REQUIRE(check_theorem6(g).verdict == Verdict::holds);

  SplitMix64 stream(20260822);
  int holds = 0, exceptions = 0;
  for (int i = 0; i < 500; ++i) {
    int n = 4 + int(stream.below(6));
    TheoremReport rep = check_theorem6(sample_triangle_free(n, stream.next()));
    REQUIRE_MSG(rep.verdict != Verdict::fails, "counterexample: " << rep.detail);
    REQUIRE(rep.verdict != Verdict::not_applicable);
    (rep.verdict == Verdict::holds ? holds : exceptions)++;
  }
  std::ostringstream os;
  os << "(" << holds << " holds, " << exceptions << " star exceptions)";
  return os.str();
}

std::string criterion_mycielskian() {
  REQUIRE(chi_f(gen_mycielski(gen_complete(2))).value == ratio(5, 2));
  Rational c = chi_f(gen_cycle(5)).value;
  CertifiedValue grotzsch = chi_f(gen_mycielski(gen_cycle(5)));
  REQUIRE(grotzsch.value == ratio(29, 10));
  REQUIRE(grotzsch.value == c + Rational(1) / c);
  REQUIRE(audit(gen_mycielski(gen_cycle(5)), grotzsch).ok);
  REQUIRE(check_mycielski(gen_cycle(5)).verdict == Verdict::holds);
  REQUIRE(check_mycielski(gen_complete(2)).verdict == Verdict::holds);
  return "";
}

std::string criterion_kneser() {
  Graph k52 = gen_kneser(5, 2);
  CertifiedValue chi52 = chi_f(k52);
  REQUIRE(chi52.value == ratio(5, 2));
  REQUIRE(audit(k52, chi52).ok);
  REQUIRE(z_f(k52).value == ratio(5, 2));

  Graph k73 = gen_kneser(7, 3);
  CertifiedValue chi73 = chi_f(k73);
  REQUIRE(chi73.value == ratio(7, 3));
  REQUIRE(audit(k73, chi73).ok);

  REQUIRE(check_kneser(5, 2).verdict == Verdict::holds);
  REQUIRE(check_kneser(7, 3).verdict == Verdict::holds);
  return "";
}

std::string criterion_conversion() {
  Graph petersen = gen_kneser(5, 2);
  FractionalCover cover{CoverMode::cocoloring, {}};
  for (auto [u, v] : petersen.edges())
    cover.entries.push_back({{{u, v}, SetKind::clique}, ratio(1, 3)});
  REQUIRE(verify_cover(petersen, cover).ok);
  auto [colored, trace] = ramsey_convert(petersen, cover);
  REQUIRE(trace.k == 3);
  REQUIRE(trace.R == 6);
  REQUIRE(verify_cover(petersen, colored).ok);
  REQUIRE(colored.mode == CoverMode::coloring);
  REQUIRE(trace.output_weight <= trace.input_weight + trace.R);
  for (std::size_t i = 1; i < trace.residues.size(); ++i) {
    REQUIRE(trace.residues[i] < trace.R);
    REQUIRE(trace.residues[i] == trace.partition_sizes[i - 1] +
                                     trace.residues[i - 1] -
                                     trace.s[i - 1] * trace.k);
  }

  SplitMix64 stream(31337);
  for (int i = 0; i < 100; ++i) {
    int n = 4 + int(stream.below(9));
    TheoremReport rep = check_theorem7(sample_triangle_free(n, stream.next()));
    REQUIRE_MSG(rep.verdict == Verdict::holds, "bound broke: " << rep.detail);
  }
  return "";
}

std::string criterion_duality() {
  for (const Graph& g : random_suite()) {
    for (const CertifiedValue& cv : {chi_f(g), z_f(g)}) {
      REQUIRE(cv.cover.total_weight() == cv.value);
      REQUIRE(cv.dual.weight() == cv.value);
      VerifyResult r = audit(g, cv);
      REQUIRE_MSG(r.ok, "audit: " << r.detail);
    }
  }
  return "(200 graphs, both parameters)";
}

std::string criterion_cross_validation() {
  for (const Graph& g : random_suite()) {
    MethodComparison mc = cross_check(g);
    REQUIRE(mc.chi_enumerated.value == mc.chi_priced.value);
    REQUIRE(mc.z_enumerated.value == mc.z_priced.value);
    for (const CertifiedValue* cv :
         {&mc.chi_enumerated, &mc.chi_priced, &mc.z_enumerated, &mc.z_priced})
      REQUIRE(audit(g, *cv).ok);
  }
  return "(200 graphs, enumeration vs pricing)";
}

std::string criterion_integral() {
  Limits limits;
  // Triangle-free graphs split by the lone two-vertex exception.
  std::vector<Graph> corpus = {gen_kneser(5, 2), gen_complete(1),
                               gen_complete(2), gen_star(4, 2)};
  for (int n = 4; n <= 10; ++n) corpus.push_back(gen_cycle(n));
  for (int n = 1; n <= 6; ++n) corpus.push_back(gen_path(n));
  for (const Graph& g : corpus) {
    REQUIRE(stats(g, limits).triangle_free);
    int z = integral_z(g, limits), chi = integral_chi(g, limits);
    if (g.n() == 2 && g.m() == 1) {
      REQUIRE(z == 1);
      REQUIRE(chi == 2);
    } else {
      REQUIRE_MSG(z == chi, "n=" << g.n() << " m=" << g.m() << " Z=" << z
                                 << " chi=" << chi);
    }
  }

  const std::vector<std::pair<Graph, int>> unions = {
      {gen_complete(3), 3}, {gen_cycle(5), 2},  {gen_cycle(7), 2},
      {gen_path(4), 3},     {gen_star(3, 0), 2}};
  for (const auto& [g, k] : unions) {
    REQUIRE(k >= stats(g, limits).omega);
    Graph kg = disjoint_union(g, k);
    int chi_g = integral_chi(g, limits);
    REQUIRE(integral_chi(kg, limits) == chi_g);
    REQUIRE(integral_z(kg, limits) == chi_g);
  }
  return "";
}

std::string criterion_dense_sandwich() {
  double worst_factor = 0;
  for (int n : {20, 30, 40}) {
    Remark6Report rep = remark6_experiment(n, 97 + n);
    REQUIRE_MSG(rep.sandwich_ok, "n=" << n << " bound ordering broke");
    double factor = double(rep.zf.convert_to<double>()) / rep.reference;
    worst_factor = std::max(worst_factor, factor);
  }
  std::ostringstream os;
  os.precision(2);
  os << "(largest z_f / (n/(2 log2 n)) ratio " << std::fixed << worst_factor
     << ")";
  return os.str();
}

std::string criterion_gap() {
  SplitMix64 stream(5150);
  for (int i = 0; i < 50; ++i) {
    int n = 4 + int(stream.below(7));
    GapReport rep = gap_experiment(n, ratio(1, 2), stream.next());
    REQUIRE_MSG(rep.holds, "n=" << rep.n << " lhs=" << to_string(rep.lhs)
                                << " rhs=" << to_string(rep.rhs));
  }
  return "(50 seeded instances)";
}

}  // namespace

int main() {
  run_criterion(1, "star family cochromatic values", 5, criterion_star_values);
  run_criterion(2, "transitive lower bound tightness", 1,
                criterion_transitive_bound);
  run_criterion(3, "disjoint union collapse", 10, criterion_union_collapse);
  run_criterion(4, "triangle-free equality sweep", 600,
                criterion_triangle_free_sweep);
  run_criterion(5, "mycielskian growth", 30, criterion_mycielskian);
  run_criterion(6, "kneser values", 120, criterion_kneser);
  run_criterion(7, "clique-to-coloring conversion bound", 120,
                criterion_conversion);
  run_criterion(8, "random certificate duality", 300, criterion_duality);
  run_criterion(9, "method cross-validation", 600, criterion_cross_validation);
  run_criterion(10, "integral counterparts", 300, criterion_integral);
  run_criterion(11, "dense graph sandwich", 900, criterion_dense_sandwich);
  run_criterion(12, "fractional gap dominance", 300, criterion_gap);

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}

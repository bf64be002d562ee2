// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Sample sizes, seeds and time limits are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bngraph/brill_noether.hpp"
#include "bngraph/corpus.hpp"
#include "bngraph/jacobian.hpp"
#include "bngraph/rank.hpp"
#include "bngraph/scan.hpp"
#include "oracles.hpp"

namespace {

using namespace bng;

constexpr unsigned kSeed = 20240601;
constexpr int kRiemannRochSamples = 500;
constexpr int kSubdivisionSamples = 100;
constexpr int kLoopCountSamples = 100;
constexpr int kEquivalenceSamples = 1000;
constexpr std::size_t kKirchhoffMaxEdges = 16;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> check;
};

Divisor random_of_degree(std::mt19937& rng, const Multigraph& g, int lo, int hi) {
  return oracle::random_divisor(rng, g, std::uniform_int_distribution<int>(lo, hi)(rng));
}

Outcome golden_example() {
  const Multigraph g = families::loop_example();
  const Divisor vw(g, {1, 1});
  const Divisor two_v(g, {2, 0});
  const int a = rank(vw).rank;
  const int b = rank_sharp(vw).rank;
  const int c = rank(two_v).rank;
  const int d = rank_sharp(two_v).rank;
  return {a == 1 && b == 0 && c == 1 && d == 1,
          "r(v+w)=" + std::to_string(a) + " r#(v+w)=" + std::to_string(b) + " r(2v)=" + std::to_string(c) +
              " r#(2v)=" + std::to_string(d)};
}

Outcome existence_sweep() {
  ScanOptions options;
  options.jobs = 1;
  const ScanReport report = existence_scan(bundled_corpus(), options);
  std::size_t cells = 0;
  for (const auto& rec : report.graphs) cells += rec.cells.size();
  return {report.violations.empty() && report.complete() && cells > 0,
          std::to_string(report.graphs.size()) + " graphs, " + std::to_string(cells) + " cells, " +
              std::to_string(report.violations.size()) + " violations"};
}

Outcome cdpr_emptiness() {
  ScanOptions options;
  options.gmin = 2;
  options.gmax = 3;
  options.jobs = 1;
  const ScanReport report = cdpr_scan(options);
  bool ok = report.violations.empty() && report.graphs.size() == 2;
  std::string detail;
  for (const auto& rec : report.graphs) {
    const BigInt expected = rec.genus == 2 ? 9 : 125;
    ok = ok && rec.jacobian.order == expected && !rec.cells.empty();
    for (const auto& cell : rec.cells) ok = ok && cell.empty() && BigInt(cell.classes_tested) == expected;
    detail += rec.entry.name + ": |Jac|=" + rec.jacobian.order.str() + ", " + std::to_string(rec.cells.size()) +
              " rho<0 cells empty; ";
  }
  return {ok, detail + std::to_string(report.violations.size()) + " violations"};
}

Outcome riemann_roch() {
  std::mt19937 rng(kSeed);
  int checked = 0;
  int failures = 0;
  const Corpus corpus = loopless(bundled_corpus());
  for (const auto& entry : corpus) {
    const Multigraph& g = entry.graph;
    const Divisor k = canonical_divisor(g);
    for (int i = 0; i < kRiemannRochSamples; ++i) {
      const Divisor d = random_of_degree(rng, g, -2, 2 * g.genus());
      if (rank(d).rank - rank(k - d).rank != d.degree() - g.genus() + 1) ++failures;
      ++checked;
    }
  }
  return {failures == 0, std::to_string(corpus.size()) + " graphs x " + std::to_string(kRiemannRochSamples) +
                             " divisors, " + std::to_string(failures) + " exceptions of " + std::to_string(checked)};
}

Outcome subdivision_invariance() {
  std::mt19937 rng(kSeed + 1);
  int checked = 0;
  int failures = 0;
  for (const auto& entry : loopless(bundled_corpus())) {
    const Multigraph& g = entry.graph;
    const RefinementMap maps[] = {subdivide_uniform(g, 1), subdivide_uniform(g, 2)};
    for (int i = 0; i < kSubdivisionSamples; ++i) {
      const Divisor d = random_of_degree(rng, g, -1, 2 * g.genus());
      const int r = rank(d).rank;
      for (const auto& map : maps) {
        if (rank(transport(map, d)).rank != r) ++failures;
        ++checked;
      }
    }
  }
  return {failures == 0, std::to_string(checked) + " (divisor, n) pairs, " + std::to_string(failures) + " mismatches"};
}

Outcome loop_count_invariance() {
  std::mt19937 rng(kSeed + 2);
  int checked = 0;
  int failures = 0;
  int graphs = 0;
  for (const auto& entry : bundled_corpus()) {
    const Multigraph& g = entry.graph;
    if (!g.has_loops()) continue;
    ++graphs;
    const auto loops = static_cast<std::size_t>(g.loop_count());
    const std::vector<int> ones(loops, 1);
    const std::vector<int> twos(loops, 2);
    std::vector<int> mixed(loops);
    for (std::size_t i = 0; i < loops; ++i) mixed[i] = 1 + static_cast<int>(i % 2);
    if (loops == 1) mixed[0] = 3;
    for (int i = 0; i < kLoopCountSamples; ++i) {
      const Divisor d = random_of_degree(rng, g, -1, 2 * g.genus());
      const int a = rank_sharp(d, {}, std::span<const int>(ones)).rank;
      const int b = rank_sharp(d, {}, std::span<const int>(twos)).rank;
      const int c = rank_sharp(d, {}, std::span<const int>(mixed)).rank;
      if (a != b || a != c) ++failures;
      ++checked;
    }
  }
  return {failures == 0 && graphs > 0, std::to_string(graphs) + " loopy graphs, " + std::to_string(checked) +
                                           " divisors, " + std::to_string(failures) + " mismatches"};
}

Outcome kirchhoff() {
  int checked = 0;
  int failures = 0;
  for (const auto& entry : bundled_corpus()) {
    if (entry.graph.edge_count() > kKirchhoffMaxEdges) continue;
    ++checked;
    if (jacobian(entry.graph).order != oracle::spanning_tree_count(entry.graph)) ++failures;
  }
  const auto k4 = jacobian(families::complete(4));
  const bool k4_ok = k4.invariant_factors == std::vector<BigInt>{4, 4} && k4.order == 16;
  return {failures == 0 && k4_ok, std::to_string(checked) + " graphs, " + std::to_string(failures) +
                                      " mismatches; K4 = " + k4.to_string() + ", order " + k4.order.str()};
}

Outcome oracle_equivalence() {
  std::mt19937 rng(kSeed + 3);
  const Corpus corpus = bundled_corpus();
  int disagreements = 0;
  int principal = 0;
  for (int i = 0; i < kEquivalenceSamples; ++i) {
    const Multigraph& g = corpus[static_cast<std::size_t>(i) % corpus.size()].graph;
    Divisor d = oracle::random_divisor(rng, g, 0, 3);
    // Bias a quarter of the samples toward principal divisors.
    if (i % 4 == 0) {
      d = Divisor(g);
      for (Vertex v = 0; v < g.vertex_count(); ++v) d += std::uniform_int_distribution<int>(-2, 2)(rng) * twister(g, v);
    }
    const bool by_reduce = equivalent(d, Divisor(g));
    const bool by_solve = is_principal(d).principal;
    if (by_reduce != by_solve) ++disagreements;
    if (by_solve) ++principal;
  }
  return {disagreements == 0, std::to_string(kEquivalenceSamples) + " degree-0 divisors (" +
                                  std::to_string(principal) + " principal), " + std::to_string(disagreements) +
                                  " disagreements"};
}

Outcome k4_non_hyperelliptic() {
  const Multigraph k4 = families::complete(4);
  const WrdResult w = wrd(k4, {2, 1, true});
  const int gon = gonality(k4);
  return {w.empty() && w.classes_tested == 16 && gon == 3,
          "|W^1_2| = " + std::to_string(w.count) + " of " + std::to_string(w.classes_tested) +
              " classes, gonality " + std::to_string(gon)};
}

Outcome determinism() {
  ScanOptions one;
  one.jobs = 1;
  one.gmin = 2;
  one.gmax = 3;
  ScanOptions eight = one;
  eight.jobs = 8;
  const Corpus corpus = bundled_corpus();
  const bool existence = report_json(existence_scan(corpus, one)) == report_json(existence_scan(corpus, eight));
  const bool cdpr = report_json(cdpr_scan(one)) == report_json(cdpr_scan(eight));
  const bool cubic =
      report_json(conjecture_scan(ScanMode::Cubic, one)) == report_json(conjecture_scan(ScanMode::Cubic, eight));
  const bool maxaut = report_json(conjecture_scan(ScanMode::MaxAutomorphism, one)) ==
                      report_json(conjecture_scan(ScanMode::MaxAutomorphism, eight));
  auto word = [](bool b) { return b ? "identical" : "DIFFERENT"; };
  return {existence && cdpr && cubic && maxaut, std::string("existence ") + word(existence) + ", cdpr " + word(cdpr) +
                                                    ", cubic " + word(cubic) + ", max-aut " + word(maxaut)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden example on the genus-2 loop graph", 1.0, golden_example},
      {2, "existence sweep over the bundled corpus", 300.0, existence_sweep},
      {3, "chain-of-loops emptiness for g = 2, 3", 600.0, cdpr_emptiness},
      {4, "Riemann-Roch on the loopless corpus", 600.0, riemann_roch},
      {5, "rank invariance under uniform subdivision", 600.0, subdivision_invariance},
      {6, "loop-refined rank independent of loop counts", 600.0, loop_count_invariance},
      {7, "Jacobian order equals spanning-tree count", 60.0, kirchhoff},
      {8, "reduction agrees with rational principality test", 60.0, oracle_equivalence},
      {9, "K4 is not hyperelliptic", 10.0, k4_non_hyperelliptic},
      {10, "scan reports identical for 1 and 8 workers", 600.0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_s;
    const bool pass = outcome.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                outcome.detail.c_str(), seconds, c.limit_s);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}

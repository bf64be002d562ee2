#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bngraph/brill_noether.hpp"
#include "bngraph/corpus.hpp"
#include "bngraph/enumerate.hpp"
#include "bngraph/jacobian.hpp"

namespace bng {

enum class ScanMode { Existence, Cdpr, Cubic, MaxAutomorphism };

std::string_view to_string(ScanMode mode);
/// Accepts "existence", "cdpr", "cubic" and "max-aut".
std::optional<ScanMode> parse_scan_mode(std::string_view text);

struct ScanOptions {
  /// Genus range for generated families (cdpr, cubic, max-aut).
  int gmin = 2;
  int gmax = 3;
  /// Degree window; defaults to 0 .. 2g-2 per graph.
  std::optional<int> dmin;
  std::optional<int> dmax;
  std::size_t witness_cap = 10;
  bool use_sharp = true;
  int jobs = 1;
  bool record_timings = false;
  int cap = enumeration_cap();
  Vertex base = kDefaultBase;
};

/// One (graph, d, r) cell. Counts are exact; every class of Pic^d was ranked.
struct CellRecord {
  int d = 0;
  int r = 0;
  std::int64_t rho = 0;
  /// |W^r_d| under the report's rank (sharp unless use_sharp is off).
  std::size_t count = 0;
  std::size_t count_sharp = 0;
  std::size_t count_plain = 0;
  std::size_t classes_tested = 0;
  std::vector<Divisor> witnesses;

  [[nodiscard]] bool empty() const { return count == 0; }
};

struct GraphRecord {
  NamedGraph entry;
  int genus = 0;
  JacobianStructure jacobian;
  std::int64_t automorphisms = 0;
  int edge_connectivity = 0;
  std::vector<CellRecord> cells;
  std::optional<double> elapsed_ms;
};

/// Aggregate over a family for one (g, d, r) cell with rho < 0.
struct ConjectureCell {
  int g = 0;
  int d = 0;
  int r = 0;
  std::int64_t rho = 0;
  std::string family;
  /// Graphs the statement is about: every family member (cubic mode) or the
  /// automorphism maximizers (max-aut mode).
  std::vector<std::string> candidates;
  std::vector<std::string> empty_sharp;
  std::vector<std::string> empty_plain;
  /// cubic: some candidate has empty W; max-aut: every maximizer does.
  /// Judged with the report's rank.
  bool holds = false;
};

struct Maximizers {
  int g = 0;
  std::string family;
  std::int64_t automorphisms = 0;
  std::vector<std::string> graphs;
};

struct ScanReport {
  ScanMode mode = ScanMode::Existence;
  ScanOptions options;
  std::vector<GraphRecord> graphs;
  /// Existence: cells with rho >= 0 and empty W. cdpr: cells with rho < 0 and
  /// nonempty W. Cubic / max-aut: cells where the conjectured statement fails.
  std::vector<std::string> violations;
  std::vector<ConjectureCell> conjecture;
  std::vector<Maximizers> maximizers;
  std::vector<Skipped> skipped;

  [[nodiscard]] bool complete() const { return skipped.empty(); }
};

/// Which (d, r) cells a graph scan records.
enum class CellSelection { NonNegativeRho, NegativeRho };

/// Ranks every class of Pic^d for d in the window and fills the selected
/// cells (0 <= r <= d).
std::vector<GraphRecord> scan_graphs(const Corpus& graphs, CellSelection selection, const ScanOptions& options);

/// W^r_d is nonempty for every cell with rho >= 0 in the degree window.
ScanReport existence_check(const Multigraph& g, const ScanOptions& options = {});
ScanReport existence_scan(const Corpus& corpus, const ScanOptions& options);

/// chain_of_loops(g) for g in [gmin, gmax]: every rho < 0 cell must be empty.
ScanReport cdpr_scan(const ScanOptions& options);

/// Conjecture exploration over an explicit family (grouped by genus).
/// mode is Cubic or MaxAutomorphism. Throws ValidationError on an empty family.
ScanReport conjecture_scan(const Corpus& family, ScanMode mode, const ScanOptions& options);

/// Same over generated families for g in [gmin, gmax]: cubic graphs, plus
/// for max-aut the graphs of minimum valency 3. Genera above the cap are
/// listed under `skipped`.
ScanReport conjecture_scan(ScanMode mode, const ScanOptions& options);

/// Versioned JSON ("schema": "bnscan/1"). `timestamp`, when given, is the
/// only field allowed to differ between reruns.
std::string report_json(const ScanReport& report, const std::optional<std::string>& timestamp = std::nullopt);

/// One row per (graph, d, r) cell.
std::string report_csv(const ScanReport& report);

/// {"invariant_factors": [...], "order": "decimal-string"}
std::string jacobian_json(const JacobianStructure& jac);

}  // namespace bng

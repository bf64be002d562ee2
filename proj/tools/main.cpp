// bngraph: divisor theory on finite multigraphs from the command line.
//
// Exit codes: 0 ok, 1 I/O or internal error, 2 parse error, 3 validation
// error, 4 enumeration cap exceeded (partial report written).

#include <chrono>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "bngraph/brill_noether.hpp"
#include "bngraph/corpus.hpp"
#include "bngraph/enumerate.hpp"
#include "bngraph/io.hpp"
#include "bngraph/jacobian.hpp"
#include "bngraph/rank.hpp"
#include "bngraph/scan.hpp"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitCap = 4;

// A graph argument is a file path or family:NAME.
bng::Multigraph load_graph(const std::string& spec) {
  if (spec.rfind("family:", 0) == 0) return bng::named_family(spec.substr(7));
  return bng::read_graph_file(spec);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

Json rank_json(const bng::Divisor& input, const bng::RankResult& result, bool sharp, bng::Vertex base) {
  Json out{{"divisor", bng::format_divisor(input)},
           {"degree", input.degree()},
           {"rank", result.rank},
           {"rank_kind", sharp ? "sharp" : "plain"},
           {"base", base},
           {"certificate", bng::format_divisor(result.certificate)},
           {"certificate_degree", result.certificate.degree()},
           {"reduced", bng::format_divisor(result.reduced)}};
  if (sharp) out["refined_graph"] = bng::format_graph(result.reduced.graph());
  return out;
}

struct RankArgs {
  std::string graph;
  std::string divisor;
  bool sharp = false;
  bool naive = false;
  bool json = false;
  int base = 0;
};

int cmd_rank(const RankArgs& args) {
  const bng::Multigraph g = load_graph(args.graph);
  const bng::Divisor d = bng::parse_divisor(g, args.divisor);
  bng::RankOptions options;
  options.base = args.base;
  options.memoize = !args.naive;
  const bng::RankResult result = args.sharp ? bng::rank_sharp(d, options) : bng::rank(d, options);
  if (args.json) {
    std::cout << rank_json(d, result, args.sharp, args.base).dump(2) << '\n';
  } else {
    std::cout << "rank " << result.rank << " (" << (args.sharp ? "sharp" : "plain") << ")\n"
              << "certificate " << (result.certificate.is_zero() ? "0" : bng::format_divisor(result.certificate))
              << '\n'
              << "reduced " << (result.reduced.is_zero() ? "0" : bng::format_divisor(result.reduced)) << '\n';
  }
  return kExitOk;
}

struct ReduceArgs {
  std::string graph;
  std::string divisor;
  int base = 0;
  bool json = false;
};

int cmd_reduce(const ReduceArgs& args) {
  const bng::Multigraph g = load_graph(args.graph);
  const bng::Divisor d = bng::parse_divisor(g, args.divisor);
  const bng::Divisor r = bng::reduce(d, args.base);
  if (args.json) {
    std::cout << Json{{"divisor", bng::format_divisor(d)},
                      {"base", args.base},
                      {"reduced", bng::format_divisor(r)},
                      {"effective_class", r[args.base] >= 0}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << (r.is_zero() ? "0" : bng::format_divisor(r)) << '\n';
  }
  return kExitOk;
}

struct GraphArgs {
  std::string graph;
  bool json = false;
};

int cmd_jacobian(const GraphArgs& args) {
  const bng::Multigraph g = load_graph(args.graph);
  const bng::JacobianStructure jac = bng::jacobian(g);
  if (args.json) {
    std::cout << Json::parse(bng::jacobian_json(jac)).dump(2) << '\n';
  } else {
    std::cout << jac.to_string() << '\n' << "order " << jac.order << '\n';
  }
  return kExitOk;
}

struct WrdArgs {
  std::string graph;
  std::int64_t degree = 0;
  int rank = 1;
  bool plain = false;
  std::size_t cap = bng::kNoWitnessCap;
  bool json = false;
};

int cmd_wrd(const WrdArgs& args) {
  const bng::Multigraph g = load_graph(args.graph);
  const bng::WrdResult w = bng::wrd(g, bng::BNQuery{args.degree, args.rank, !args.plain}, args.cap);
  if (args.json) {
    Json witnesses = Json::array();
    for (const auto& d : w.witnesses) witnesses.push_back(bng::format_divisor(d));
    std::cout << Json{{"d", args.degree},
                      {"r", args.rank},
                      {"rank_kind", args.plain ? "plain" : "sharp"},
                      {"rho", bng::rho(g.genus(), args.rank, args.degree)},
                      {"count", w.count},
                      {"classes_tested", w.classes_tested},
                      {"empty", w.empty()},
                      {"witnesses", witnesses}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "W^" << args.rank << "_" << args.degree << ": " << w.count << " of " << w.classes_tested
              << " classes (" << (args.plain ? "plain" : "sharp") << " rank)\n";
    for (const auto& d : w.witnesses) std::cout << "  " << (d.is_zero() ? "0" : bng::format_divisor(d)) << '\n';
  }
  return kExitOk;
}

int cmd_gonality(const GraphArgs& args) {
  const bng::Multigraph g = load_graph(args.graph);
  const int sharp = bng::gonality(g, true);
  const int plain = bng::gonality(g, false);
  if (args.json) {
    std::cout << Json{{"genus", g.genus()},
                      {"gonality_sharp", sharp},
                      {"gonality_plain", plain},
                      {"hyperelliptic_sharp", sharp <= 2},
                      {"hyperelliptic_plain", plain <= 2}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "gonality " << sharp << " (sharp), " << plain << " (plain)\n"
              << "hyperelliptic " << (sharp <= 2 ? "yes" : "no") << " (sharp), " << (plain <= 2 ? "yes" : "no")
              << " (plain)\n";
  }
  return kExitOk;
}

struct ScanArgs {
  std::optional<std::string> corpus;
  std::string mode = "existence";
  int gmin = 2;
  int gmax = 3;
  std::optional<int> dmin;
  std::optional<int> dmax;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::size_t witness_cap = 10;
  bool plain = false;
  bool timings = false;
  bool no_timestamp = false;
  std::string out;
  std::string csv;
};

int cmd_scan(const ScanArgs& args) {
  const auto mode = bng::parse_scan_mode(args.mode);
  if (!mode) throw bng::ValidationError("unknown scan mode '" + args.mode + "'");
  bng::ScanOptions options;
  options.gmin = args.gmin;
  options.gmax = args.gmax;
  options.dmin = args.dmin;
  options.dmax = args.dmax;
  options.jobs = args.jobs;
  options.witness_cap = args.witness_cap;
  options.use_sharp = !args.plain;
  options.record_timings = args.timings;

  bng::ScanReport report;
  std::vector<bng::Skipped> skipped;
  switch (*mode) {
    case bng::ScanMode::Existence:
      report = bng::existence_scan(bng::load_corpus(args.corpus.value_or("bundled"), &skipped), options);
      break;
    case bng::ScanMode::Cdpr:
      if (args.corpus) throw bng::ValidationError("cdpr mode generates its own family; drop the corpus argument");
      report = bng::cdpr_scan(options);
      break;
    case bng::ScanMode::Cubic:
    case bng::ScanMode::MaxAutomorphism:
      if (args.corpus) {
        bng::Corpus family = bng::load_corpus(*args.corpus, &skipped);
        report = family.empty() ? bng::ScanReport{*mode, options, {}, {}, {}, {}, {}}
                                : bng::conjecture_scan(family, *mode, options);
      } else {
        report = bng::conjecture_scan(*mode, options);
      }
      break;
  }
  report.skipped.insert(report.skipped.begin(), skipped.begin(), skipped.end());

  const std::optional<std::string> stamp = args.no_timestamp ? std::nullopt : std::optional(utc_timestamp());
  const std::string json = bng::report_json(report, stamp);
  if (args.out.empty()) {
    std::cout << json;
  } else {
    bng::write_file_atomic(args.out, json);
  }
  if (!args.csv.empty()) bng::write_file_atomic(args.csv, bng::report_csv(report));

  std::cerr << "scan " << args.mode << ": " << report.graphs.size() << " graphs, " << report.violations.size()
            << " violations";
  if (!report.skipped.empty()) std::cerr << ", " << report.skipped.size() << " skipped";
  std::cerr << '\n';
  for (const auto& v : report.violations) std::cerr << "  violation: " << v << '\n';
  for (const auto& s : report.skipped) std::cerr << "  skipped: " << s.item << ": " << s.reason << '\n';
  return report.complete() ? kExitOk : kExitCap;
}

struct FamiliesArgs {
  std::string out;
  int gmin = 2;
  int gmax = 3;
};

int cmd_families(const FamiliesArgs& args) {
  std::vector<bng::Skipped> skipped;
  std::string spec = "bundled";
  for (int g = args.gmin; g <= args.gmax; ++g) {
    spec += ",cubic:" + std::to_string(g) + ",min3:" + std::to_string(g) + ",chain:" + std::to_string(g);
  }
  const bng::Corpus corpus = bng::load_corpus(spec, &skipped);
  std::set<std::string> written;
  for (const auto& entry : corpus) {
    if (!written.insert(entry.name).second) continue;
    const std::string text = "# " + entry.name + " (" + entry.source + "), genus " +
                             std::to_string(entry.graph.genus()) + "\n" + bng::format_graph(entry.graph);
    if (args.out.empty()) {
      std::cout << text << '\n';
    } else {
      std::filesystem::create_directories(args.out);
      bng::write_file_atomic(std::filesystem::path(args.out) / (entry.name + ".graph"), text);
    }
  }
  for (const auto& s : skipped) std::cerr << "skipped " << s.item << ": " << s.reason << '\n';
  return skipped.empty() ? kExitOk : kExitCap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bngraph: divisors, ranks, Jacobians and Brill-Noether loci on finite multigraphs"};
  app.require_subcommand(1);

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "Rank of a divisor (plain or loop-refined)");
  rank->add_option("graph", rank_args.graph, "Graph file or family:NAME")->required();
  rank->add_option("divisor", rank_args.divisor, "Divisor such as 0:2,3:-1 (empty for zero)")->required();
  rank->add_flag("--sharp", rank_args.sharp, "Loop-refined rank");
  rank->add_option("--base", rank_args.base, "Base vertex q for reduction");
  rank->add_flag("--naive", rank_args.naive, "Literal sweep over all effective E (no memoization)");
  rank->add_flag("--json", rank_args.json, "Print JSON");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "q-reduced representative of a divisor");
  reduce->add_option("graph", reduce_args.graph, "Graph file or family:NAME")->required();
  reduce->add_option("divisor", reduce_args.divisor, "Divisor")->required();
  reduce->add_option("--base", reduce_args.base, "Base vertex q");
  reduce->add_flag("--json", reduce_args.json, "Print JSON");

  GraphArgs jac_args;
  auto* jac = app.add_subcommand("jacobian", "Invariant factors and order of the Jacobian group");
  jac->add_option("graph", jac_args.graph, "Graph file or family:NAME")->required();
  jac->add_flag("--json", jac_args.json, "Print JSON");

  WrdArgs wrd_args;
  auto* wrd = app.add_subcommand("wrd", "Brill-Noether locus W^r_d as reduced representatives");
  wrd->add_option("graph", wrd_args.graph, "Graph file or family:NAME")->required();
  wrd->add_option("-d,--degree", wrd_args.degree, "Degree d")->required();
  wrd->add_option("-r,--rank", wrd_args.rank, "Rank bound r")->check(CLI::NonNegativeNumber);
  wrd->add_flag("--plain", wrd_args.plain, "Use the plain rank instead of the loop-refined one");
  wrd->add_option("--witness-cap", wrd_args.cap, "Maximum witnesses to list");
  wrd->add_flag("--json", wrd_args.json, "Print JSON");

  GraphArgs gon_args;
  auto* gon = app.add_subcommand("gonality", "Gonality and hyperellipticity (both rank notions)");
  gon->add_option("graph", gon_args.graph, "Graph file or family:NAME")->required();
  gon->add_flag("--json", gon_args.json, "Print JSON");

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Brill-Noether sweeps producing a bnscan/1 report");
  scan->add_option("corpus", scan_args.corpus,
                   "Corpus: bundled, cubic:G, min3:G, chain:G, family:NAME, files or directories (comma separated)");
  scan->add_option("--mode", scan_args.mode, "existence | cdpr | cubic | max-aut")
      ->check(CLI::IsMember({"existence", "cdpr", "cubic", "max-aut"}));
  scan->add_option("--gmin", scan_args.gmin, "Smallest genus of generated families");
  scan->add_option("--gmax", scan_args.gmax, "Largest genus of generated families");
  scan->add_option("--dmin", scan_args.dmin, "Smallest degree (default 0)");
  scan->add_option("--dmax", scan_args.dmax, "Largest degree (default 2g-2)");
  scan->add_option("--jobs", scan_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--witness-cap", scan_args.witness_cap, "Witnesses kept per cell");
  scan->add_flag("--plain", scan_args.plain, "Judge cells with the plain rank");
  scan->add_flag("--timings", scan_args.timings, "Record per-graph timings (breaks byte reproducibility)");
  scan->add_flag("--no-timestamp", scan_args.no_timestamp, "Omit generated_at");
  scan->add_option("--out", scan_args.out, "Report path (written atomically); stdout if omitted");
  scan->add_option("--csv", scan_args.csv, "Also write a CSV summary");

  FamiliesArgs fam_args;
  auto* fam = app.add_subcommand("families", "Emit bundled and generated graphs in graph file format");
  fam->add_option("--out", fam_args.out, "Directory to write NAME.graph files into; stdout if omitted");
  fam->add_option("--gmin", fam_args.gmin, "Smallest genus of generated families");
  fam->add_option("--gmax", fam_args.gmax, "Largest genus of generated families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*rank) return cmd_rank(rank_args);
    if (*reduce) return cmd_reduce(reduce_args);
    if (*jac) return cmd_jacobian(jac_args);
    if (*wrd) return cmd_wrd(wrd_args);
    if (*gon) return cmd_gonality(gon_args);
    if (*scan) return cmd_scan(scan_args);
    if (*fam) return cmd_families(fam_args);
  } catch (const bng::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const bng::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const bng::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

#include "bngraph/scan.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "bngraph/io.hpp"
#include "bngraph/rank.hpp"
#include "json.hpp"

namespace bng {

std::string_view to_string(ScanMode mode) {
  switch (mode) {
    case ScanMode::Existence: return "existence";
    case ScanMode::Cdpr: return "cdpr";
    case ScanMode::Cubic: return "cubic";
    case ScanMode::MaxAutomorphism: return "max-aut";
  }
  return "unknown";
}

std::optional<ScanMode> parse_scan_mode(std::string_view text) {
  for (ScanMode m : {ScanMode::Existence, ScanMode::Cdpr, ScanMode::Cubic, ScanMode::MaxAutomorphism}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

namespace {

struct DegreePlan {
  std::size_t graph = 0;
  int d = 0;
  std::vector<Divisor> reps;
  std::optional<RefinementMap> refinement;
  std::vector<int> sharp;
  std::vector<int> plain;
  std::vector<double> millis;
};

struct RankTask {
  std::size_t plan = 0;
  std::size_t rep = 0;
  bool sharp = false;
};

bool selected(CellSelection selection, std::int64_t value) {
  return selection == CellSelection::NonNegativeRho ? value >= 0 : value < 0;
}

std::string cell_label(const std::string& graph, int d, int r, std::int64_t value) {
  return graph + ": d=" + std::to_string(d) + " r=" + std::to_string(r) + " rho=" + std::to_string(value);
}

}  // namespace

std::vector<GraphRecord> scan_graphs(const Corpus& graphs, CellSelection selection, const ScanOptions& options) {
  std::vector<GraphRecord> records(graphs.size());
  parallel_for(graphs.size(), options.jobs, [&](std::size_t i) {
    GraphRecord& rec = records[i];
    rec.entry = graphs[i];
    rec.genus = graphs[i].graph.genus();
    rec.jacobian = jacobian(graphs[i].graph, options.base);
    rec.automorphisms = automorphism_count(graphs[i].graph);
    rec.edge_connectivity = edge_connectivity(graphs[i].graph);
  });

  std::vector<DegreePlan> plans;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const int g = records[i].genus;
    const int lo = options.dmin.value_or(0);
    const int hi = options.dmax.value_or(2 * g - 2);
    for (int d = lo; d <= hi; ++d) {
      bool wanted = false;
      for (int r = 0; r <= d && !wanted; ++r) wanted = selected(selection, rho(g, r, d));
      if (!wanted) continue;
      DegreePlan plan;
      plan.graph = i;
      plan.d = d;
      plans.push_back(std::move(plan));
    }
  }
  parallel_for(plans.size(), options.jobs, [&](std::size_t p) {
    DegreePlan& plan = plans[p];
    const Multigraph& g = graphs[plan.graph].graph;
    plan.reps = picard_representatives(g, plan.d, options.base);
    if (g.has_loops()) plan.refinement = subdivide_loops(g);
    plan.sharp.assign(plan.reps.size(), -1);
    plan.plain.assign(plan.reps.size(), -1);
    plan.millis.assign(plan.reps.size() * 2, 0.0);
  });

  std::vector<RankTask> tasks;
  for (std::size_t p = 0; p < plans.size(); ++p) {
    for (std::size_t k = 0; k < plans[p].reps.size(); ++k) {
      tasks.push_back({p, k, false});
      if (plans[p].refinement) tasks.push_back({p, k, true});
    }
  }
  parallel_for(tasks.size(), options.jobs, [&](std::size_t t) {
    const RankTask& task = tasks[t];
    DegreePlan& plan = plans[task.plan];
    const auto start = std::chrono::steady_clock::now();
    const Divisor& rep = plan.reps[task.rep];
    if (task.sharp) {
      RankOptions refined;
      refined.base = (*plan.refinement)(options.base);
      plan.sharp[task.rep] = rank(transport(*plan.refinement, rep), refined).rank;
    } else {
      RankOptions plain;
      plain.base = options.base;
      plan.plain[task.rep] = rank(rep, plain).rank;
    }
    plan.millis[task.rep * 2 + (task.sharp ? 1 : 0)] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });

  for (DegreePlan& plan : plans) {
    if (!plan.refinement) plan.sharp = plan.plain;
    GraphRecord& rec = records[plan.graph];
    const std::vector<int>& primary = options.use_sharp ? plan.sharp : plan.plain;
    for (int r = 0; r <= plan.d; ++r) {
      const std::int64_t value = rho(rec.genus, r, plan.d);
      if (!selected(selection, value)) continue;
      CellRecord cell;
      cell.d = plan.d;
      cell.r = r;
      cell.rho = value;
      cell.classes_tested = plan.reps.size();
      for (std::size_t k = 0; k < plan.reps.size(); ++k) {
        if (plan.sharp[k] >= r) ++cell.count_sharp;
        if (plan.plain[k] >= r) ++cell.count_plain;
        if (primary[k] >= r) {
          ++cell.count;
          if (cell.witnesses.size() < options.witness_cap) cell.witnesses.push_back(plan.reps[k]);
        }
      }
      rec.cells.push_back(std::move(cell));
    }
    if (options.record_timings) {
      double total = 0;
      for (double ms : plan.millis) total += ms;
      rec.elapsed_ms = rec.elapsed_ms.value_or(0.0) + total;
    }
  }
  return records;
}

ScanReport existence_scan(const Corpus& corpus, const ScanOptions& options) {
  ScanReport report;
  report.mode = ScanMode::Existence;
  report.options = options;
  report.graphs = scan_graphs(corpus, CellSelection::NonNegativeRho, options);
  for (const GraphRecord& rec : report.graphs) {
    for (const CellRecord& cell : rec.cells) {
      if (cell.empty()) report.violations.push_back(cell_label(rec.entry.name, cell.d, cell.r, cell.rho) + ": W empty");
    }
  }
  return report;
}

ScanReport existence_check(const Multigraph& g, const ScanOptions& options) {
  return existence_scan({{"graph", "argument", g}}, options);
}

ScanReport cdpr_scan(const ScanOptions& options) {
  ScanReport report;
  report.mode = ScanMode::Cdpr;
  report.options = options;
  Corpus chains;
  for (int g = std::max(options.gmin, 2); g <= options.gmax; ++g) {
    chains.push_back({"chain-of-loops-" + std::to_string(g), "chain_of_loops(" + std::to_string(g) + ")",
                      families::chain_of_loops(g)});
  }
  if (chains.empty()) throw ValidationError("cdpr scan needs gmax >= max(gmin, 2)");
  report.graphs = scan_graphs(chains, CellSelection::NegativeRho, options);
  for (const GraphRecord& rec : report.graphs) {
    for (const CellRecord& cell : rec.cells) {
      if (!cell.empty()) {
        report.violations.push_back(cell_label(rec.entry.name, cell.d, cell.r, cell.rho) + ": W nonempty");
      }
    }
  }
  return report;
}

namespace {

void conjecture_block(const Corpus& family, const std::string& label, ScanMode mode, const ScanOptions& options,
                      ScanReport& out) {
  std::vector<GraphRecord> records = scan_graphs(family, CellSelection::NegativeRho, options);
  std::map<int, std::vector<std::size_t>> by_genus;
  for (std::size_t i = 0; i < records.size(); ++i) by_genus[records[i].genus].push_back(i);

  for (const auto& [g, members] : by_genus) {
    std::vector<std::size_t> candidates = members;
    if (mode == ScanMode::MaxAutomorphism) {
      std::int64_t best = 0;
      for (std::size_t i : members) best = std::max(best, records[i].automorphisms);
      candidates.clear();
      Maximizers maxi{g, label, best, {}};
      for (std::size_t i : members) {
        if (records[i].automorphisms == best) {
          candidates.push_back(i);
          maxi.graphs.push_back(records[i].entry.name);
        }
      }
      out.maximizers.push_back(std::move(maxi));
    }
    // All members of one genus share the same cell layout.
    for (std::size_t c = 0; c < records[members.front()].cells.size(); ++c) {
      const CellRecord& shape = records[members.front()].cells[c];
      ConjectureCell cell{g, shape.d, shape.r, shape.rho, label, {}, {}, {}, false};
      std::size_t empty_primary = 0;
      for (std::size_t i : candidates) {
        const CellRecord& rc = records[i].cells[c];
        cell.candidates.push_back(records[i].entry.name);
        if (rc.count_sharp == 0) cell.empty_sharp.push_back(records[i].entry.name);
        if (rc.count_plain == 0) cell.empty_plain.push_back(records[i].entry.name);
        if (rc.empty()) ++empty_primary;
      }
      cell.holds = mode == ScanMode::Cubic ? empty_primary > 0 : empty_primary == candidates.size();
      if (!cell.holds) {
        out.violations.push_back(label + " genus " + std::to_string(g) + ": d=" + std::to_string(cell.d) +
                                 " r=" + std::to_string(cell.r) + " rho=" + std::to_string(cell.rho) +
                                 (mode == ScanMode::Cubic ? ": no graph with empty W" : ": a maximizer has nonempty W"));
      }
      out.conjecture.push_back(std::move(cell));
    }
  }
  for (auto& rec : records) out.graphs.push_back(std::move(rec));
}

void check_conjecture_mode(ScanMode mode) {
  if (mode != ScanMode::Cubic && mode != ScanMode::MaxAutomorphism) {
    throw ValidationError("conjecture scans run in cubic or max-aut mode");
  }
}

}  // namespace

ScanReport conjecture_scan(const Corpus& family, ScanMode mode, const ScanOptions& options) {
  check_conjecture_mode(mode);
  if (family.empty()) throw ValidationError("conjecture scan needs a nonempty family");
  ScanReport report;
  report.mode = mode;
  report.options = options;
  conjecture_block(family, "given", mode, options, report);
  return report;
}

ScanReport conjecture_scan(ScanMode mode, const ScanOptions& options) {
  check_conjecture_mode(mode);
  ScanReport report;
  report.mode = mode;
  report.options = options;
  bool any = false;
  for (int g = std::max(options.gmin, 2); g <= options.gmax; ++g) {
    std::vector<std::pair<std::string, Corpus>> families;
    try {
      Corpus cubic;
      const auto graphs = enumerate_cubic(g, options.cap);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        cubic.push_back({"cubic-g" + std::to_string(g) + "-" + std::to_string(i),
                         "enumerate_cubic(" + std::to_string(g) + ")#" + std::to_string(i), graphs[i]});
      }
      families.emplace_back("cubic", std::move(cubic));
      if (mode == ScanMode::MaxAutomorphism) {
        Corpus min3;
        const auto all = enumerate_min_valency3(g, options.cap);
        for (std::size_t i = 0; i < all.size(); ++i) {
          min3.push_back({"min3-g" + std::to_string(g) + "-" + std::to_string(i),
                          "enumerate_min_valency3(" + std::to_string(g) + ")#" + std::to_string(i), all[i]});
        }
        families.emplace_back("min-valency-3", std::move(min3));
      }
    } catch (const CapExceeded& e) {
      report.skipped.push_back({"genus " + std::to_string(g), e.what()});
      continue;
    }
    for (const auto& [label, family] : families) {
      any = true;
      conjecture_block(family, label, mode, options, report);
    }
  }
  if (!any && report.skipped.empty()) throw ValidationError("conjecture scan needs gmax >= max(gmin, 2)");
  return report;
}

namespace {

using Json = nlohmann::ordered_json;

Json big_to_json(const BigInt& value) {
  if (value <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(value);
  return value.str();
}

Json jacobian_object(const JacobianStructure& jac) {
  Json factors = Json::array();
  for (const BigInt& f : jac.invariant_factors) factors.push_back(big_to_json(f));
  return Json{{"invariant_factors", factors}, {"order", jac.order.str()}};
}

}  // namespace

std::string jacobian_json(const JacobianStructure& jac) { return jacobian_object(jac).dump(); }

std::string report_json(const ScanReport& report, const std::optional<std::string>& timestamp) {
  Json root;
  root["schema"] = "bnscan/1";
  if (timestamp) root["generated_at"] = *timestamp;
  root["mode"] = std::string(to_string(report.mode));
  const ScanOptions& o = report.options;
  root["parameters"] = Json{{"gmin", o.gmin},
                            {"gmax", o.gmax},
                            {"dmin", o.dmin ? Json(*o.dmin) : Json(nullptr)},
                            {"dmax", o.dmax ? Json(*o.dmax) : Json(nullptr)},
                            {"witness_cap", o.witness_cap},
                            {"rank", o.use_sharp ? "sharp" : "plain"},
                            {"base", o.base},
                            {"cap", o.cap}};
  root["complete"] = report.complete();

  Json graphs = Json::array();
  for (const GraphRecord& rec : report.graphs) {
    Json edges = Json::array();
    for (const Edge& e : rec.entry.graph.edges()) edges.push_back(Json::array({e.u, e.w}));
    Json cells = Json::array();
    for (const CellRecord& cell : rec.cells) {
      Json witnesses = Json::array();
      for (const Divisor& w : cell.witnesses) witnesses.push_back(format_divisor(w));
      cells.push_back(Json{{"d", cell.d},
                           {"r", cell.r},
                           {"rho", cell.rho},
                           {"count", cell.count},
                           {"count_sharp", cell.count_sharp},
                           {"count_plain", cell.count_plain},
                           {"empty", cell.empty()},
                           {"classes_tested", cell.classes_tested},
                           {"exhausted", true},
                           {"witnesses", witnesses}});
    }
    Json g{{"name", rec.entry.name},
           {"source", rec.entry.source},
           {"vertices", rec.entry.graph.vertex_count()},
           {"edges", edges},
           {"genus", rec.genus},
           {"loops", rec.entry.graph.loop_count()},
           {"jacobian", jacobian_object(rec.jacobian)},
           {"automorphisms", rec.automorphisms},
           {"edge_connectivity", rec.edge_connectivity},
           {"cells", cells}};
    if (rec.elapsed_ms) g["elapsed_ms"] = *rec.elapsed_ms;
    graphs.push_back(std::move(g));
  }
  root["graphs"] = std::move(graphs);
  root["violations"] = report.violations;

  Json conjecture = Json::array();
  for (const ConjectureCell& c : report.conjecture) {
    conjecture.push_back(Json{{"family", c.family},
                              {"g", c.g},
                              {"d", c.d},
                              {"r", c.r},
                              {"rho", c.rho},
                              {"candidates", c.candidates},
                              {"empty_sharp", c.empty_sharp},
                              {"empty_plain", c.empty_plain},
                              {"holds", c.holds}});
  }
  root["conjecture"] = std::move(conjecture);

  Json maximizers = Json::array();
  for (const Maximizers& m : report.maximizers) {
    maximizers.push_back(
        Json{{"family", m.family}, {"g", m.g}, {"automorphisms", m.automorphisms}, {"graphs", m.graphs}});
  }
  root["maximizers"] = std::move(maximizers);

  Json skipped = Json::array();
  for (const Skipped& s : report.skipped) skipped.push_back(Json{{"item", s.item}, {"reason", s.reason}});
  root["skipped"] = std::move(skipped);
  return root.dump(2) + "\n";
}

std::string report_csv(const ScanReport& report) {
  std::ostringstream out;
  out << "graph,genus,d,r,rho,count,count_sharp,count_plain,classes_tested,jacobian_order\n";
  for (const GraphRecord& rec : report.graphs) {
    for (const CellRecord& cell : rec.cells) {
      out << rec.entry.name << ',' << rec.genus << ',' << cell.d << ',' << cell.r << ',' << cell.rho << ','
          << cell.count << ',' << cell.count_sharp << ',' << cell.count_plain << ',' << cell.classes_tested << ','
          << rec.jacobian.order << '\n';
    }
  }
  return out.str();
}

}  // namespace bng

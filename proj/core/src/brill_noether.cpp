#include "bngraph/brill_noether.hpp"

#include <optional>
#include <string>

#include "bngraph/jacobian.hpp"
#include "bngraph/rank.hpp"

namespace bng {

std::int64_t rho(std::int64_t g, std::int64_t r, std::int64_t d) { return g - (r + 1) * (g - d + r); }

ClassRanks class_ranks(const Multigraph& g, std::int64_t degree, bool use_sharp, Vertex base, int jobs) {
  ClassRanks out;
  out.representatives = picard_representatives(g, degree, base);
  out.ranks.assign(out.representatives.size(), -1);

  std::optional<RefinementMap> refinement;
  if (use_sharp && g.has_loops()) refinement = subdivide_loops(g);
  RankOptions options;
  options.base = refinement ? (*refinement)(base) : base;

  parallel_for(out.representatives.size(), jobs, [&](std::size_t i) {
    const Divisor& rep = out.representatives[i];
    out.ranks[i] = refinement ? rank(transport(*refinement, rep), options).rank : rank(rep, options).rank;
  });
  return out;
}

WrdResult wrd(const Multigraph& g, const BNQuery& query, std::size_t witness_cap, Vertex base) {
  const ClassRanks classes = class_ranks(g, query.degree, query.use_sharp, base);
  WrdResult result;
  result.classes_tested = classes.representatives.size();
  for (std::size_t i = 0; i < classes.representatives.size(); ++i) {
    if (classes.ranks[i] < query.rank) continue;
    ++result.count;
    if (result.witnesses.size() < witness_cap) result.witnesses.push_back(classes.representatives[i]);
  }
  return result;
}

int gonality(const Multigraph& g, bool use_sharp) {
  const int genus = g.genus();
  if (genus < 2) throw ValidationError("gonality is computed for genus >= 2 only");
  // Degree g + 1 always carries a rank-1 class by Riemann-Roch.
  for (int d = 1; d <= genus + 1; ++d) {
    if (!wrd(g, BNQuery{d, 1, use_sharp}, 1).empty()) return d;
  }
  throw std::logic_error("no rank-1 class up to degree g+1; rank computation is inconsistent");
}

bool is_hyperelliptic(const Multigraph& g, bool use_sharp) { return gonality(g, use_sharp) <= 2; }

}  // namespace bng

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "bngraph/divisor.hpp"
#include "bngraph/multigraph.hpp"

namespace bng {

/// Brill-Noether number g - (r+1)(g - d + r).
std::int64_t rho(std::int64_t g, std::int64_t r, std::int64_t d);

struct BNQuery {
  std::int64_t degree = 0;
  int rank = 0;
  /// Loop-refined rank (default) or the plain combinatorial rank.
  bool use_sharp = true;
};

/// W^r_d as reduced representatives. `count` is always exact; `witnesses`
/// holds the first `witness_cap` members in representative order.
struct WrdResult {
  std::vector<Divisor> witnesses;
  std::size_t count = 0;
  /// Number of Pic^d classes whose rank was computed; equals |Jac| on exhaustion.
  std::size_t classes_tested = 0;

  [[nodiscard]] bool empty() const { return count == 0; }
};

inline constexpr std::size_t kNoWitnessCap = std::numeric_limits<std::size_t>::max();

/// Rank of every class of Pic^d, paired with picard_representatives order.
struct ClassRanks {
  std::vector<Divisor> representatives;
  std::vector<int> ranks;
};

/// `jobs` > 1 spreads the rank computations over worker threads; the
/// result does not depend on it.
ClassRanks class_ranks(const Multigraph& g, std::int64_t degree, bool use_sharp,
                       Vertex base = kDefaultBase, int jobs = 1);

WrdResult wrd(const Multigraph& g, const BNQuery& query, std::size_t witness_cap = kNoWitnessCap,
              Vertex base = kDefaultBase);

/// Smallest d >= 1 such that some degree-d class has rank >= 1. Requires genus >= 2.
int gonality(const Multigraph& g, bool use_sharp = true);

bool is_hyperelliptic(const Multigraph& g, bool use_sharp = true);

/// Runs `body(i)` for i in [0, count) on up to `jobs` threads.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body);

}  // namespace bng

#include "bngraph/detail/parallel.hpp"

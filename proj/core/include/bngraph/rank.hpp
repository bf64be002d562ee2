#pragma once

#include <optional>
#include <span>

#include "bngraph/divisor.hpp"

namespace bng {

struct RankOptions {
  Vertex base = kDefaultBase;
  /// Memoized recursion over reduced forms of D - E. Off means the literal
  /// sweep over every effective E of degree k, k = 0, 1, ...
  bool memoize = true;
};

struct RankResult {
  /// -1 when |D| is empty.
  int rank = -1;
  /// Effective E of degree rank + 1 with |D - E| empty.
  Divisor certificate;
  /// reduce(D, base).
  Divisor reduced;
};

/// Combinatorial rank: the largest k such that D - E is equivalent to an
/// effective divisor for every effective E of degree k.
RankResult rank(const Divisor& d, const RankOptions& options = {});

/// Loop-refined rank: rank of the transported divisor on the graph obtained by
/// inserting counts[i] vertices into loop i (one vertex per loop by default).
/// The result's divisors live on that refined graph.
RankResult rank_sharp(const Divisor& d, const RankOptions& options = {},
                      std::optional<std::span<const int>> loop_counts = std::nullopt);

/// Re-checks a certificate: E effective of degree rank + 1 and |D - E| empty.
bool verify_certificate(const Divisor& d, const RankResult& result, Vertex base = kDefaultBase);

}  // namespace bng

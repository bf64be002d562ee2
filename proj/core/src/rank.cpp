#include "bngraph/rank.hpp"

#include <functional>
#include <unordered_map>
#include <vector>

namespace bng {

namespace {

struct StateKey {
  std::vector<std::int64_t> reduced;
  int budget;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const {
    std::size_t h = std::hash<int>{}(key.budget);
    for (std::int64_t c : key.reduced) h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Searches for an effective E of degree `budget` with |D - E| empty, where D
// is given by its reduced form. Answers depend only on the class of D, so
// they are cached on the reduced form.
class FailingSearch {
 public:
  explicit FailingSearch(Vertex base) : base_(base) {}

  std::optional<Divisor> find(const Divisor& reduced, int budget) {
    if (budget == 0) {
      if (reduced[base_] < 0) return Divisor(reduced.graph());
      return std::nullopt;
    }
    StateKey key{std::vector<std::int64_t>(reduced.coefficients().begin(), reduced.coefficients().end()),
                 budget};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::optional<Divisor> answer;
    if (reduced[base_] < 0) {
      // Already not effective; anything of the right degree fails.
      Divisor e(reduced.graph());
      e[base_] = budget;
      answer = std::move(e);
    } else {
      const Multigraph& g = reduced.graph();
      for (Vertex v = 0; v < g.vertex_count() && !answer; ++v) {
        Divisor next = reduced;
        next[v] -= 1;
        if (auto sub = find(reduce(next, base_), budget - 1)) {
          (*sub)[v] += 1;
          answer = std::move(sub);
        }
      }
    }
    memo_.emplace(std::move(key), answer);
    return answer;
  }

 private:
  Vertex base_;
  std::unordered_map<StateKey, std::optional<Divisor>, StateKeyHash> memo_;
};

RankResult rank_memoized(const Divisor& d, Vertex base) {
  const Divisor reduced = reduce(d, base);
  FailingSearch search(base);
  for (int k = 0;; ++k) {
    if (auto failing = search.find(reduced, k)) {
      return RankResult{k - 1, std::move(*failing), reduced};
    }
  }
}

// Calls visit(E) for every effective E of degree k, lexicographically;
// stops as soon as visit returns true.
bool for_each_effective(Divisor& e, Vertex from, int remaining, const std::function<bool(const Divisor&)>& visit) {
  if (remaining == 0) return visit(e);
  const int n = e.size();
  for (Vertex v = from; v < n; ++v) {
    e[v] += 1;
    const bool stop = for_each_effective(e, v, remaining - 1, visit);
    e[v] -= 1;
    if (stop) return true;
  }
  return false;
}

RankResult rank_naive(const Divisor& d, Vertex base) {
  const Divisor reduced = reduce(d, base);
  for (int k = 0;; ++k) {
    Divisor e(d.graph());
    std::optional<Divisor> failing;
    for_each_effective(e, 0, k, [&](const Divisor& candidate) {
      if (has_effective_representative(d - candidate, base)) return false;
      failing = candidate;
      return true;
    });
    if (failing) return RankResult{k - 1, std::move(*failing), reduced};
  }
}

}  // namespace

RankResult rank(const Divisor& d, const RankOptions& options) {
  if (options.base < 0 || options.base >= d.size()) throw ValidationError("base vertex out of range");
  if (d.degree() < 0) {
    return RankResult{-1, Divisor(d.graph()), reduce(d, options.base)};
  }
  return options.memoize ? rank_memoized(d, options.base) : rank_naive(d, options.base);
}

RankResult rank_sharp(const Divisor& d, const RankOptions& options,
                      std::optional<std::span<const int>> loop_counts) {
  const Multigraph& g = d.graph();
  const RefinementMap refinement = loop_counts ? subdivide_loops(g, *loop_counts) : subdivide_loops(g);
  RankOptions refined = options;
  refined.base = refinement(options.base);
  return rank(transport(refinement, d), refined);
}

bool verify_certificate(const Divisor& d, const RankResult& result, Vertex base) {
  const Divisor& e = result.certificate;
  if (!e.graph().same_as(d.graph())) return false;
  if (!e.is_effective() || e.degree() != result.rank + 1) return false;
  return reduce(d - e, base)[base] < 0;
}

}  // namespace bng

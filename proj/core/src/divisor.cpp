#include "bngraph/divisor.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bng {

Divisor::Divisor(Multigraph graph)
    : graph_(std::move(graph)), coeffs_(static_cast<std::size_t>(graph_.vertex_count()), 0) {}

Divisor::Divisor(Multigraph graph, std::vector<std::int64_t> coefficients)
    : graph_(std::move(graph)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != static_cast<std::size_t>(graph_.vertex_count())) {
    throw ValidationError("divisor has " + std::to_string(coeffs_.size()) +
                          " coefficients but the graph has " +
                          std::to_string(graph_.vertex_count()) + " vertices");
  }
}

Divisor Divisor::point(const Multigraph& graph, Vertex v) {
  Divisor d(graph);
  d.at(v);
  d.coeffs_[static_cast<std::size_t>(v)] = 1;
  return d;
}

std::int64_t Divisor::at(Vertex v) const {
  if (v < 0 || v >= size()) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  return coeffs_[static_cast<std::size_t>(v)];
}

std::int64_t Divisor::degree() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0});
}

bool Divisor::is_effective() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

bool Divisor::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

void Divisor::require_same_graph(const Divisor& other) const {
  if (!graph_.same_as(other.graph_)) {
    throw ValidationError("arithmetic between divisors on different graphs");
  }
}

Divisor& Divisor::operator+=(const Divisor& other) {
  require_same_graph(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  require_same_graph(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Divisor& Divisor::operator*=(std::int64_t k) {
  for (auto& c : coeffs_) c *= k;
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor d = *this;
  d *= -1;
  return d;
}

bool Divisor::operator==(const Divisor& other) const {
  return coeffs_ == other.coeffs_ && graph_.same_as(other.graph_);
}

VertexFunction VertexFunction::indicator(const Multigraph& g, Vertex v) {
  VertexFunction f{std::vector<std::int64_t>(static_cast<std::size_t>(g.vertex_count()), 0)};
  f.values.at(static_cast<std::size_t>(v)) = 1;
  return f;
}

Divisor div_of(const Multigraph& g, const VertexFunction& f) {
  const int n = g.vertex_count();
  if (f.values.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("vertex function size does not match the graph");
  }
  Divisor d(g);
  for (Vertex v = 0; v < n; ++v) {
    std::int64_t ord = 0;
    for (Vertex w = 0; w < n; ++w) ord += intersection(g, v, w) * f.values[static_cast<std::size_t>(w)];
    d[v] = ord;
  }
  return d;
}

Divisor twister(const Multigraph& g, Vertex v) { return div_of(g, VertexFunction::indicator(g, v)); }

PrincipalityResult is_principal(const Divisor& d, Vertex base) {
  using Rational = boost::multiprecision::cpp_rational;
  const Multigraph& g = d.graph();
  const int n = g.vertex_count();
  if (base < 0 || base >= n) throw ValidationError("base vertex out of range");
  if (d.degree() != 0) return {};

  // Unknowns are f(v) for v != base; f(base) = 0. The equation at `base` is
  // implied by the others because both sides have degree 0.
  std::vector<Vertex> index;
  for (Vertex v = 0; v < n; ++v)
    if (v != base) index.push_back(v);
  const std::size_t m = index.size();
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = intersection(g, index[i], index[j]);
    a[i][m] = d[index[i]];
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw ValidationError("reduced Laplacian is singular; graph not connected?");
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  VertexFunction f{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
  for (std::size_t i = 0; i < m; ++i) {
    const Rational value = a[i][m] / a[i][i];
    if (denominator(value) != 1) return {};
    f.values[static_cast<std::size_t>(index[i])] = static_cast<std::int64_t>(numerator(value));
  }
  return {true, std::move(f)};
}

namespace {

void check_base(const Divisor& d, Vertex q) {
  if (q < 0 || q >= d.size()) throw ValidationError("base vertex " + std::to_string(q) + " out of range");
}

// Fires every vertex of `in_set` k times: chips cross each edge leaving the set.
void fire_set(Divisor& d, const std::vector<bool>& in_set, std::int64_t k) {
  const Multigraph& g = d.graph();
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    if (!in_set[static_cast<std::size_t>(a)]) continue;
    for (Vertex b : g.neighbors(a)) {
      if (in_set[static_cast<std::size_t>(b)]) continue;
      const std::int64_t moved = k * g.multiplicity(a, b);
      d[a] -= moved;
      d[b] += moved;
    }
  }
}

// Makes d nonnegative away from q. Working outward-in over BFS layers, the
// ball of radius i is fired until layer i+1 is out of debt; this only takes
// chips from the ball, so outer layers stay fixed.
void clear_debt(Divisor& d, Vertex q) {
  const Multigraph& g = d.graph();
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order{q};
  dist[static_cast<std::size_t>(q)] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : g.neighbors(order[head])) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(order[head])] + 1;
        order.push_back(w);
      }
    }
  }
  const int radius = dist[static_cast<std::size_t>(order.back())];
  for (int i = radius - 1; i >= 0; --i) {
    std::vector<bool> ball(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) ball[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(v)] <= i;
    std::int64_t times = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (dist[static_cast<std::size_t>(v)] != i + 1 || d[v] >= 0) continue;
      std::int64_t inward = 0;
      for (Vertex w : g.neighbors(v))
        if (ball[static_cast<std::size_t>(w)]) inward += g.multiplicity(v, w);
      times = std::max(times, (-d[v] + inward - 1) / inward);
    }
    if (times > 0) fire_set(d, ball, times);
  }
}

}  // namespace

std::vector<Vertex> unburnt_set(const Divisor& d, Vertex q) {
  check_base(d, q);
  const Multigraph& g = d.graph();
  const int n = g.vertex_count();
  std::vector<bool> burnt(static_cast<std::size_t>(n), false);
  std::vector<std::int64_t> exposure(static_cast<std::size_t>(n), 0);
  std::deque<Vertex> queue{q};
  burnt[static_cast<std::size_t>(q)] = true;
  while (!queue.empty()) {
    const Vertex b = queue.front();
    queue.pop_front();
    for (Vertex x : g.neighbors(b)) {
      const auto sx = static_cast<std::size_t>(x);
      if (burnt[sx]) continue;
      exposure[sx] += g.multiplicity(b, x);
      if (exposure[sx] > d[x]) {
        burnt[sx] = true;
        queue.push_back(x);
      }
    }
  }
  std::vector<Vertex> left;
  for (Vertex v = 0; v < n; ++v)
    if (!burnt[static_cast<std::size_t>(v)]) left.push_back(v);
  return left;
}

bool is_reduced(const Divisor& d, Vertex q) {
  check_base(d, q);
  for (Vertex v = 0; v < d.size(); ++v)
    if (v != q && d[v] < 0) return false;
  return unburnt_set(d, q).empty();
}

Divisor reduce(const Divisor& input, Vertex q) {
  check_base(input, q);
  Divisor d = input;
  clear_debt(d, q);
  const Multigraph& g = d.graph();
  const auto n = static_cast<std::size_t>(g.vertex_count());
  for (;;) {
    const std::vector<Vertex> unburnt = unburnt_set(d, q);
    if (unburnt.empty()) return d;
    std::vector<bool> in_set(n, false);
    for (Vertex v : unburnt) in_set[static_cast<std::size_t>(v)] = true;
    // Fire the unburnt set as many times as stays legal.
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (Vertex v : unburnt) {
      std::int64_t outward = 0;
      for (Vertex w : g.neighbors(v))
        if (!in_set[static_cast<std::size_t>(w)]) outward += g.multiplicity(v, w);
      if (outward > 0) times = std::min(times, d[v] / outward);
    }
    fire_set(d, in_set, times);
  }
}

bool equivalent(const Divisor& d1, const Divisor& d2, Vertex q) {
  if (!d1.graph().same_as(d2.graph())) throw ValidationError("divisors live on different graphs");
  if (d1.degree() != d2.degree()) return false;
  return reduce(d1, q) == reduce(d2, q);
}

bool has_effective_representative(const Divisor& d, Vertex q) {
  if (d.degree() < 0) return false;
  return reduce(d, q)[q] >= 0;
}

Divisor canonical_divisor(const Multigraph& g) {
  Divisor k(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) k[v] = g.degree(v) - 2;
  return k;
}

Divisor transport(const RefinementMap& map, const Divisor& d) {
  if (!d.graph().same_as(map.source)) {
    throw ValidationError("divisor does not live on the refinement's source graph");
  }
  Divisor out(map.target);
  for (Vertex v = 0; v < d.size(); ++v) out[map(v)] = d[v];
  return out;
}

}  // namespace bng

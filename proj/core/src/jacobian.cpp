#include "bngraph/jacobian.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

namespace bng {

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

// Moves the entry of smallest nonzero magnitude in the trailing block to (k, k).
bool place_pivot(BigMatrix& a, std::size_t k) {
  const std::size_t rows = a.size();
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t pi = rows;
  std::size_t pj = cols;
  BigInt best;
  for (std::size_t i = k; i < rows; ++i) {
    for (std::size_t j = k; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      BigInt mag = abs(a[i][j]);
      if (pi == rows || mag < best) {
        best = mag;
        pi = i;
        pj = j;
      }
    }
  }
  if (pi == rows) return false;
  std::swap(a[k], a[pi]);
  for (auto& row : a) std::swap(row[k], row[pj]);
  return true;
}

}  // namespace

std::vector<BigInt> smith_invariants(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BigMatrix a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    if (!place_pivot(a, k)) break;
    for (;;) {
      bool clean = true;
      // Column k below the pivot.
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        const BigInt q = a[i][k] / a[k][k];
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      // Row k right of the pivot.
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        const BigInt q = a[k][j] / a[k][k];
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) {
        place_pivot(a, k);
        continue;
      }
      // The pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = k + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[i][j] % a[k][k] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = k; j < cols; ++j) a[k][j] += a[bad][j];
    }
  }

  std::vector<BigInt> diagonal;
  for (std::size_t k = 0; k < steps; ++k) diagonal.push_back(abs(a[k][k]));
  // Nonzero entries already form a divisibility chain; zeros go last.
  std::stable_partition(diagonal.begin(), diagonal.end(), [](const BigInt& x) { return x != 0; });
  return diagonal;
}

IntMatrix reduced_laplacian(const Multigraph& g, Vertex base) {
  const int n = g.vertex_count();
  if (base < 0 || base >= n) throw ValidationError("base vertex out of range");
  IntMatrix m(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
  std::size_t r = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (v == base) continue;
    std::size_t c = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (w == base) continue;
      m(r, c++) = intersection(g, v, w);
    }
    ++r;
  }
  return m;
}

std::string JacobianStructure::to_string() const {
  if (invariant_factors.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out << " x ";
    out << "Z/" << invariant_factors[i];
  }
  return out.str();
}

JacobianStructure jacobian(const Multigraph& g, Vertex base) {
  JacobianStructure jac;
  for (BigInt& factor : smith_invariants(reduced_laplacian(g, base))) {
    if (factor == 0) throw ValidationError("reduced Laplacian is singular");
    if (factor == 1) continue;
    jac.order *= factor;
    jac.invariant_factors.push_back(std::move(factor));
  }
  return jac;
}

std::vector<Divisor> picard_representatives(const Multigraph& g, std::int64_t degree, Vertex base) {
  Divisor start(g);
  start[base] = degree;
  start = reduce(start, base);

  // Pic^d is a torsor over Jac, which is generated by the classes v - q,
  // so closing under D -> reduce(D + v - q) reaches every class.
  std::set<std::vector<std::int64_t>> seen;
  std::vector<Divisor> found;
  std::deque<Divisor> queue{start};
  seen.emplace(start.coefficients().begin(), start.coefficients().end());
  while (!queue.empty()) {
    Divisor current = std::move(queue.front());
    queue.pop_front();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (v == base) continue;
      Divisor next = current;
      next[v] += 1;
      next[base] -= 1;
      next = reduce(next, base);
      if (seen.emplace(next.coefficients().begin(), next.coefficients().end()).second) {
        queue.push_back(std::move(next));
      }
    }
    found.push_back(std::move(current));
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace bng

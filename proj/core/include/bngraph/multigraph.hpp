#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bng {

using Vertex = int;

/// Thrown when a graph or divisor violates a structural requirement
/// (disconnected graph, out-of-range vertex, mismatched graphs).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, stored with u <= w. u == w is a loop.
struct Edge {
  Vertex u = 0;
  Vertex w = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), w(a < b ? b : a) {}

  [[nodiscard]] bool is_loop() const { return u == w; }
  auto operator<=>(const Edge&) const = default;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  static IntMatrix identity(std::size_t n);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Finite connected multigraph. Loops and parallel edges are allowed.
///
/// Instances are immutable and share their storage, so copies are cheap and
/// may be handed to worker threads freely. Construction validates vertex
/// ranges and connectivity and throws ValidationError otherwise.
class Multigraph {
 public:
  /// The single-vertex graph with no edges.
  Multigraph();

  /// Builds a graph on vertices 0..vertex_count-1. Edge order is normalized
  /// (sorted), so two graphs with the same edge multiset compare equal.
  static Multigraph from_edges(int vertex_count, std::vector<Edge> edges);

  /// True if the edge multiset spans a connected graph on vertex_count vertices.
  static bool is_connected(int vertex_count, std::span<const Edge> edges);

  [[nodiscard]] int vertex_count() const;
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] std::span<const Edge> edges() const;

  /// Number of edges joining v and w; for v == w the number of loops at v.
  [[nodiscard]] int multiplicity(Vertex v, Vertex w) const;
  [[nodiscard]] int loops(Vertex v) const { return multiplicity(v, v); }
  [[nodiscard]] int loop_count() const;
  [[nodiscard]] bool has_loops() const { return loop_count() > 0; }

  /// Valency of v; a loop contributes 2.
  [[nodiscard]] int degree(Vertex v) const;

  /// Distinct neighbours of v other than v itself.
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const;

  [[nodiscard]] int genus() const;

  /// Same graph object, or structurally identical vertex count and edges.
  [[nodiscard]] bool same_as(const Multigraph& other) const;

  bool operator==(const Multigraph& other) const { return same_as(other); }

 private:
  struct Data;
  explicit Multigraph(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  void check_vertex(Vertex v) const;

  std::shared_ptr<const Data> data_;
};

/// Betti number |E| - |V| + 1.
int genus(const Multigraph& g);

/// Intersection product: edge multiplicity for v != w, and
/// -deg(v) + 2 loop(v) on the diagonal.
int intersection(const Multigraph& g, Vertex v, Vertex w);

/// Matrix of the intersection product. Symmetric with zero row sums; loops
/// drop out.
IntMatrix laplacian_matrix(const Multigraph& g);

/// Vertex inclusion V(source) -> V(target) induced by subdividing edges.
/// Original vertices keep their indices; inserted vertices are appended.
struct RefinementMap {
  Multigraph source;
  Multigraph target;
  std::vector<Vertex> inclusion;

  Vertex operator()(Vertex v) const { return inclusion.at(static_cast<std::size_t>(v)); }
};

/// Inserts n vertices in the interior of every edge (loops included).
/// n == 0 gives the identity refinement.
RefinementMap subdivide_uniform(const Multigraph& g, int n);

/// Inserts counts[i] >= 1 vertices into the i-th loop (loops ordered as in
/// edges()); non-loop edges are kept.
RefinementMap subdivide_loops(const Multigraph& g, std::span<const int> counts);

/// Loop subdivision with one vertex per loop.
RefinementMap subdivide_loops(const Multigraph& g);

/// Copy of g with every loop deleted.
Multigraph strip_loops(const Multigraph& g);

namespace families {

Multigraph theta();
Multigraph dumbbell();
/// Loop at vertex 0 and a double edge 0-1; genus 2.
Multigraph loop_example();
Multigraph cycle(int n);
Multigraph complete(int n);
/// g cycles of 2g-1 vertices, consecutive cycles glued at one vertex.
Multigraph chain_of_loops(int g);

}  // namespace families

}  // namespace bng

#include "bngraph/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bng {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

struct Multigraph::Data {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> mult;  // n*n, loops on the diagonal
  std::vector<int> degree;
  std::vector<std::vector<Vertex>> neighbors;
  int loop_count = 0;
};

bool Multigraph::is_connected(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count <= 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count;
  for (const Edge& e : edges) {
    if (e.u < 0 || e.w >= vertex_count) return false;
    int a = find(e.u);
    int b = find(e.w);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Multigraph Multigraph::from_edges(int vertex_count, std::vector<Edge> edges) {
  if (vertex_count < 1) throw ValidationError("graph must have at least one vertex");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.w >= vertex_count) {
      throw ValidationError("edge {" + std::to_string(e.u) + "," + std::to_string(e.w) +
                            "} references a vertex outside 0.." +
                            std::to_string(vertex_count - 1));
    }
  }
  if (!is_connected(vertex_count, edges)) throw ValidationError("graph is not connected");

  std::sort(edges.begin(), edges.end());
  auto data = std::make_shared<Data>();
  const auto n = static_cast<std::size_t>(vertex_count);
  data->n = vertex_count;
  data->mult.assign(n * n, 0);
  data->degree.assign(n, 0);
  data->neighbors.resize(n);
  for (const Edge& e : edges) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto w = static_cast<std::size_t>(e.w);
    if (e.is_loop()) {
      ++data->mult[u * n + u];
      data->degree[u] += 2;
      ++data->loop_count;
    } else {
      if (data->mult[u * n + w] == 0) {
        data->neighbors[u].push_back(e.w);
        data->neighbors[w].push_back(e.u);
      }
      ++data->mult[u * n + w];
      ++data->mult[w * n + u];
      ++data->degree[u];
      ++data->degree[w];
    }
  }
  for (auto& nb : data->neighbors) std::sort(nb.begin(), nb.end());
  data->edges = std::move(edges);
  return Multigraph(std::move(data));
}

Multigraph::Multigraph() {
  static const Multigraph point = from_edges(1, {});
  data_ = point.data_;
}

int Multigraph::vertex_count() const { return data_->n; }
std::size_t Multigraph::edge_count() const { return data_->edges.size(); }
std::span<const Edge> Multigraph::edges() const { return data_->edges; }
int Multigraph::loop_count() const { return data_->loop_count; }

void Multigraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= data_->n) {
    throw ValidationError("vertex " + std::to_string(v) + " out of range 0.." +
                          std::to_string(data_->n - 1));
  }
}

int Multigraph::multiplicity(Vertex v, Vertex w) const {
  check_vertex(v);
  check_vertex(w);
  return data_->mult[static_cast<std::size_t>(v * data_->n + w)];
}

int Multigraph::degree(Vertex v) const {
  check_vertex(v);
  return data_->degree[static_cast<std::size_t>(v)];
}

std::span<const Vertex> Multigraph::neighbors(Vertex v) const {
  check_vertex(v);
  return data_->neighbors[static_cast<std::size_t>(v)];
}

int Multigraph::genus() const {
  return static_cast<int>(data_->edges.size()) - data_->n + 1;
}

bool Multigraph::same_as(const Multigraph& other) const {
  return data_ == other.data_ || (data_->n == other.data_->n && data_->edges == other.data_->edges);
}

int genus(const Multigraph& g) { return g.genus(); }

int intersection(const Multigraph& g, Vertex v, Vertex w) {
  if (v != w) return g.multiplicity(v, w);
  return -g.degree(v) + 2 * g.loops(v);
}

IntMatrix laplacian_matrix(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  IntMatrix m(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      m(v, w) = intersection(g, static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  return m;
}

namespace {

// Replaces each edge by a path with `inserted(edge_index)` interior vertices.
template <class InsertCount>
RefinementMap subdivide(const Multigraph& g, InsertCount inserted) {
  const int n = g.vertex_count();
  int next = n;
  std::vector<Edge> edges;
  const auto src = g.edges();
  for (std::size_t i = 0; i < src.size(); ++i) {
    const int k = inserted(i);
    if (k == 0) {
      edges.push_back(src[i]);
      continue;
    }
    Vertex prev = src[i].u;
    for (int j = 0; j < k; ++j) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, src[i].w);
  }
  std::vector<Vertex> inclusion(static_cast<std::size_t>(n));
  std::iota(inclusion.begin(), inclusion.end(), 0);
  return RefinementMap{g, Multigraph::from_edges(next, std::move(edges)), std::move(inclusion)};
}

}  // namespace

RefinementMap subdivide_uniform(const Multigraph& g, int n) {
  if (n < 0) throw ValidationError("subdivision count must be non-negative");
  return subdivide(g, [n](std::size_t) { return n; });
}

RefinementMap subdivide_loops(const Multigraph& g, std::span<const int> counts) {
  if (counts.size() != static_cast<std::size_t>(g.loop_count())) {
    throw ValidationError("expected " + std::to_string(g.loop_count()) +
                          " loop subdivision counts, got " + std::to_string(counts.size()));
  }
  if (std::any_of(counts.begin(), counts.end(), [](int c) { return c < 1; })) {
    throw ValidationError("loop subdivision counts must be positive");
  }
  std::vector<int> per_edge(g.edge_count(), 0);
  std::size_t loop_index = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (g.edges()[i].is_loop()) per_edge[i] = counts[loop_index++];
  }
  return subdivide(g, [&](std::size_t i) { return per_edge[i]; });
}

RefinementMap subdivide_loops(const Multigraph& g) {
  std::vector<int> ones(static_cast<std::size_t>(g.loop_count()), 1);
  return subdivide_loops(g, ones);
}

Multigraph strip_loops(const Multigraph& g) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!e.is_loop()) edges.push_back(e);
  }
  return Multigraph::from_edges(g.vertex_count(), std::move(edges));
}

namespace families {

Multigraph theta() { return Multigraph::from_edges(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph dumbbell() { return Multigraph::from_edges(2, {{0, 0}, {0, 1}, {1, 1}}); }

Multigraph loop_example() { return Multigraph::from_edges(2, {{0, 0}, {0, 1}, {0, 1}}); }

Multigraph cycle(int n) {
  if (n < 1) throw ValidationError("cycle length must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Multigraph::from_edges(n, std::move(edges));
}

Multigraph complete(int n) {
  if (n < 1) throw ValidationError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Multigraph::from_edges(n, std::move(edges));
}

Multigraph chain_of_loops(int g) {
  if (g < 2) throw ValidationError("chain of loops needs g >= 2, got " + std::to_string(g));
  // Cycle i occupies vertices i*(2g-2) .. i*(2g-2) + 2g-2; its last vertex is
  // the first vertex of cycle i+1.
  const int stride = 2 * g - 2;
  std::vector<Edge> edges;
  for (int i = 0; i < g; ++i) {
    const int start = i * stride;
    for (int j = 0; j < stride; ++j) edges.emplace_back(start + j, start + j + 1);
    edges.emplace_back(start + stride, start);
  }
  return Multigraph::from_edges(g * stride + 1, std::move(edges));
}

}  // namespace families

}  // namespace bng

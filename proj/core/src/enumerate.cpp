#include "bngraph/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <set>
#include <string>
#include <string_view>

namespace bng {

int enumeration_cap() {
  if (const char* env = std::getenv("BNGRAPH_CAP")) {
    std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultEnumerationCap;
}

namespace {

using Adjacency = std::vector<int>;  // n*n multiplicities, loops on the diagonal

Adjacency adjacency_of(const Multigraph& g) {
  const int n = g.vertex_count();
  Adjacency a(static_cast<std::size_t>(n * n));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) a[static_cast<std::size_t>(v * n + w)] = g.multiplicity(v, w);
  return a;
}

// Branch and bound over relabelings. Position k of the search fixes which
// original vertex gets new label k and emits column k of the relabeled
// upper triangle. Prefixes already larger than the best sequence are cut.
class CanonicalSearch {
 public:
  CanonicalSearch(Adjacency adj, int n) : adj_(std::move(adj)), n_(n) {
    used_.assign(static_cast<std::size_t>(n), false);
    perm_.assign(static_cast<std::size_t>(n), -1);
    current_.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
  }

  void run() { extend(0, 0); }

  const std::vector<int>& best() const { return best_; }
  const std::vector<int>& best_perm() const { return best_perm_; }

 private:
  int at(int v, int w) const { return adj_[static_cast<std::size_t>(v * n_ + w)]; }

  // cmp: 0 while current_ equals the best prefix, -1 once it is smaller.
  // Only valid for the best sequence of the given version.
  int prefix_compare() const {
    for (std::size_t i = 0; i < current_.size(); ++i) {
      if (current_[i] != best_[i]) return current_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void extend(int k, int cmp) {
    if (k == n_) {
      if (best_.empty() || cmp < 0) {
        best_ = current_;
        best_perm_ = perm_;
        ++version_;
      }
      return;
    }
    const std::uint64_t entry_version = version_;
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (version_ != entry_version && cmp != 0) cmp = prefix_compare();
      if (cmp > 0) return;
      const std::size_t mark = current_.size();
      int c = cmp;
      bool pruned = false;
      for (int i = 0; i <= k; ++i) {
        const int value = i < k ? at(perm_[static_cast<std::size_t>(i)], v) : at(v, v);
        current_.push_back(value);
        if (c == 0 && !best_.empty()) {
          const int b = best_[current_.size() - 1];
          if (value < b) {
            c = -1;
          } else if (value > b) {
            pruned = true;
            break;
          }
        }
      }
      if (!pruned) {
        used_[static_cast<std::size_t>(v)] = true;
        perm_[static_cast<std::size_t>(k)] = v;
        extend(k + 1, c);
        used_[static_cast<std::size_t>(v)] = false;
      }
      current_.resize(mark);
    }
  }

  Adjacency adj_;
  int n_;
  std::vector<bool> used_;
  std::vector<int> perm_;
  std::vector<int> current_;
  std::vector<int> best_;
  std::vector<int> best_perm_;
  std::uint64_t version_ = 0;
};

Multigraph graph_from_adjacency(const Adjacency& a, int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    for (int w = v; w < n; ++w)
      for (int m = 0; m < a[static_cast<std::size_t>(v * n + w)]; ++m) edges.emplace_back(v, w);
  return Multigraph::from_edges(n, std::move(edges));
}

bool adjacency_connected(const Adjacency& a, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (!seen[static_cast<std::size_t>(w)] && a[static_cast<std::size_t>(v * n + w)] > 0) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

// Fills the upper triangle of an n-vertex adjacency matrix pair by pair
// (row-major, loops first in each row). Vertex j > 0 must be adjacent to some
// earlier vertex, which every connected graph satisfies under a BFS labeling.
class AdjacencyGenerator {
 public:
  AdjacencyGenerator(int n, int edges, std::vector<int> min_degree, std::vector<int> max_degree)
      : n_(n),
        edges_left_(edges),
        min_degree_(std::move(min_degree)),
        max_degree_(std::move(max_degree)),
        adj_(static_cast<std::size_t>(n * n), 0),
        degree_(static_cast<std::size_t>(n), 0) {}

  template <class Visit>
  void run(Visit&& visit) {
    step(0, 0, visit);
  }

 private:
  template <class Visit>
  void step(int i, int j, Visit& visit) {
    if (j == n_) {
      if (degree_[static_cast<std::size_t>(i)] < min_degree_[static_cast<std::size_t>(i)]) return;
      ++i;
      if (i == n_) {
        if (edges_left_ == 0 && adjacency_connected(adj_, n_)) visit(adj_);
        return;
      }
      if (!attached_to_earlier(i)) return;
      j = i;
    }
    const auto si = static_cast<std::size_t>(i);
    const auto sj = static_cast<std::size_t>(j);
    const int weight = i == j ? 2 : 1;
    int room = std::min(edges_left_, (max_degree_[si] - degree_[si]) / weight);
    if (i != j) room = std::min(room, max_degree_[sj] - degree_[sj]);
    for (int m = 0; m <= room; ++m) {
      set(i, j, m);
      step(i, j + 1, visit);
      set(i, j, 0);
    }
  }

  bool attached_to_earlier(int j) const {
    for (int i = 0; i < j; ++i)
      if (adj_[static_cast<std::size_t>(i * n_ + j)] > 0) return true;
    return false;
  }

  void set(int i, int j, int m) {
    auto& cell = adj_[static_cast<std::size_t>(i * n_ + j)];
    const int delta = m - cell;
    if (delta == 0) return;
    cell = m;
    adj_[static_cast<std::size_t>(j * n_ + i)] = m;
    edges_left_ -= delta;
    if (i == j) {
      degree_[static_cast<std::size_t>(i)] += 2 * delta;
    } else {
      degree_[static_cast<std::size_t>(i)] += delta;
      degree_[static_cast<std::size_t>(j)] += delta;
    }
  }

  int n_;
  int edges_left_;
  std::vector<int> min_degree_;
  std::vector<int> max_degree_;
  Adjacency adj_;
  std::vector<int> degree_;
};

std::vector<Multigraph> collect_classes(int n, int edges, std::vector<int> min_degree,
                                        std::vector<int> max_degree) {
  std::set<std::vector<int>> seen;
  std::vector<std::pair<std::vector<int>, Multigraph>> out;
  AdjacencyGenerator gen(n, edges, std::move(min_degree), std::move(max_degree));
  gen.run([&](const Adjacency& adj) {
    CanonicalSearch search(adj, n);
    search.run();
    if (!seen.insert(search.best()).second) return;
    Adjacency relabeled(adj.size());
    const auto& perm = search.best_perm();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relabeled[static_cast<std::size_t>(a * n + b)] =
            adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)] * n +
                                         perm[static_cast<std::size_t>(b)])];
    out.emplace_back(search.best(), graph_from_adjacency(relabeled, n));
  });
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Multigraph> graphs;
  graphs.reserve(out.size());
  for (auto& [form, graph] : out) graphs.push_back(std::move(graph));
  return graphs;
}

void check_genus_request(int g, int cap) {
  if (g < 2) throw ValidationError("enumeration requires genus >= 2, got " + std::to_string(g));
  if (g > cap) {
    throw CapExceeded("genus " + std::to_string(g) + " exceeds the enumeration cap " +
                      std::to_string(cap) + " (set BNGRAPH_CAP to raise it)");
  }
}

}  // namespace

std::vector<int> canonical_form(const Multigraph& g) {
  CanonicalSearch search(adjacency_of(g), g.vertex_count());
  search.run();
  return search.best();
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

Multigraph canonical_relabel(const Multigraph& g) {
  const int n = g.vertex_count();
  CanonicalSearch search(adjacency_of(g), n);
  search.run();
  std::vector<int> new_label(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) new_label[static_cast<std::size_t>(search.best_perm()[static_cast<std::size_t>(k)])] = k;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(new_label[static_cast<std::size_t>(e.u)], new_label[static_cast<std::size_t>(e.w)]);
  return Multigraph::from_edges(n, std::move(edges));
}

std::vector<Multigraph> enumerate_cubic(int g, int cap) {
  check_genus_request(g, cap);
  const int n = 2 * g - 2;
  return collect_classes(n, 3 * g - 3, std::vector<int>(static_cast<std::size_t>(n), 3),
                         std::vector<int>(static_cast<std::size_t>(n), 3));
}

std::vector<Multigraph> enumerate_min_valency3(int g, int cap) {
  check_genus_request(g, cap);
  std::vector<Multigraph> all;
  // Valency >= 3 everywhere forces 3|V| <= 2|E| = 2(g - 1 + |V|).
  for (int n = 1; n <= 2 * g - 2; ++n) {
    const int edges = g - 1 + n;
    auto part = collect_classes(n, edges, std::vector<int>(static_cast<std::size_t>(n), 3),
                                std::vector<int>(static_cast<std::size_t>(n), 2 * edges));
    for (auto& graph : part) all.push_back(std::move(graph));
  }
  return all;
}

std::int64_t automorphism_count(const Multigraph& g) {
  const int n = g.vertex_count();
  const Adjacency adj = adjacency_of(g);
  auto at = [&](int v, int w) { return adj[static_cast<std::size_t>(v * n + w)]; };
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::int64_t count = 0;
  auto extend = [&](auto&& self, int k) -> void {
    if (k == n) {
      ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || g.degree(v) != g.degree(k) || at(v, v) != at(k, k)) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = at(i, k) == at(image[static_cast<std::size_t>(i)], v);
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = true;
      image[static_cast<std::size_t>(k)] = v;
      self(self, k + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  extend(extend, 0);
  return count;
}

int edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 2) return 0;
  std::vector<std::vector<std::int64_t>> w(static_cast<std::size_t>(n),
                                           std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g.multiplicity(a, b);

  std::vector<int> active(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  while (active.size() > 1) {
    const std::size_t m = active.size();
    std::vector<std::int64_t> key(m, 0);
    std::vector<bool> added(m, false);
    std::size_t prev = 0;
    std::size_t last = 0;
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t pick = m;
      for (std::size_t i = 0; i < m; ++i)
        if (!added[i] && (pick == m || key[i] > key[pick])) pick = i;
      added[pick] = true;
      if (step == m - 1) {
        best = std::min(best, key[pick]);
      }
      prev = last;
      last = pick;
      for (std::size_t i = 0; i < m; ++i)
        if (!added[i])
          key[i] += w[static_cast<std::size_t>(active[pick])][static_cast<std::size_t>(active[i])];
    }
    // Merge `last` into `prev`.
    const auto s = static_cast<std::size_t>(active[prev]);
    const auto t = static_cast<std::size_t>(active[last]);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      w[s][i] += w[t][i];
      w[i][s] = w[s][i];
    }
    w[s][s] = 0;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
  }
  return static_cast<int>(best);
}

}  // namespace bng

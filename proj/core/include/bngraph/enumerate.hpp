#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bngraph/multigraph.hpp"

namespace bng {

/// Thrown when a request exceeds a configured enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default genus cap for graph enumeration. The BNGRAPH_CAP environment
/// variable overrides it.
inline constexpr int kDefaultEnumerationCap = 5;

/// Effective cap: BNGRAPH_CAP if set to a positive integer, else the default.
int enumeration_cap();

/// Upper-triangular adjacency sequence (column by column, loops on the
/// diagonal) minimized over all vertex relabelings. Two graphs are
/// isomorphic iff their canonical forms are equal.
std::vector<int> canonical_form(const Multigraph& g);

bool isomorphic(const Multigraph& a, const Multigraph& b);

/// Relabels g so that its adjacency sequence is the canonical form.
Multigraph canonical_relabel(const Multigraph& g);

/// Connected 3-regular multigraphs of genus g (2g-2 vertices, 3g-3 edges), one
/// per isomorphism class, each in canonical labeling, sorted by canonical form.
/// Throws CapExceeded when g exceeds `cap` and ValidationError when g < 2.
std::vector<Multigraph> enumerate_cubic(int g, int cap = enumeration_cap());

/// Connected multigraphs of genus g whose vertices all have valency >= 3,
/// up to isomorphism. Every graph of genus g >= 2 without leaves or
/// valency-2 vertices appears here; it is the finite family used when
/// "all graphs of genus g" has to be made concrete.
std::vector<Multigraph> enumerate_min_valency3(int g, int cap = enumeration_cap());

/// Number of vertex permutations preserving every edge multiplicity,
/// loops included. Parallel-edge swaps are not counted.
std::int64_t automorphism_count(const Multigraph& g);

/// Minimum number of edges whose removal disconnects g (Stoer-Wagner).
/// Loops never matter. A single-vertex graph returns 0.
int edge_connectivity(const Multigraph& g);

}  // namespace bng

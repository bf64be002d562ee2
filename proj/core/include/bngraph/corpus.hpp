#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bngraph/multigraph.hpp"

namespace bng {

/// A graph together with where it came from.
struct NamedGraph {
  std::string name;
  /// Provenance: "family:theta", "enumerate_cubic(3)#2", "file:path", ...
  std::string source;
  Multigraph graph;
};

using Corpus = std::vector<NamedGraph>;

/// An item left out of a corpus or scan, with the reason.
struct Skipped {
  std::string item;
  std::string reason;
};

/// theta, dumbbell, the genus-2 loop example, C_3..C_6, K_4, every cubic
/// multigraph of genus 2 and 3 not already listed, and chain_of_loops(2..3).
Corpus bundled_corpus();

/// Members of `corpus` without loops.
Corpus loopless(const Corpus& corpus);

/// Comma-separated list of items, each one of
///   bundled | cubic:G | min3:G | chain:G | family:NAME | <file.graph> | <directory>
/// where NAME is theta, dumbbell, loop1, k4 or cN. Directories contribute every
/// *.graph file in name order. Throws ValidationError on an unknown item or
/// an empty result. Generated families above the enumeration cap throw
/// CapExceeded, unless `skipped` is given, in which case they are recorded
/// there and loading continues.
Corpus load_corpus(std::string_view spec, std::vector<Skipped>* skipped = nullptr);

/// Named family lookup used by load_corpus ("theta", "k4", "c5", ...).
Multigraph named_family(std::string_view name);

}  // namespace bng

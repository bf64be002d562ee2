#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bngraph/divisor.hpp"
#include "bngraph/multigraph.hpp"

namespace bng {

using BigInt = boost::multiprecision::cpp_int;

/// Diagonal of the Smith normal form of a square integer matrix, in
/// divisibility order (1s first, zeros last), computed with exact big
/// integers. The product of the nonzero entries is |det M| when M is
/// nonsingular.
std::vector<BigInt> smith_invariants(const IntMatrix& m);

/// Laplacian with the row and column of `base` deleted.
IntMatrix reduced_laplacian(const Multigraph& g, Vertex base = kDefaultBase);

/// Jac(G) = Div^0 / Prin as Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... and d_i >= 2.
struct JacobianStructure {
  std::vector<BigInt> invariant_factors;
  BigInt order{1};

  /// "Z/4 x Z/4"; the trivial group prints as "0".
  [[nodiscard]] std::string to_string() const;
  bool operator==(const JacobianStructure&) const = default;
};

JacobianStructure jacobian(const Multigraph& g, Vertex base = kDefaultBase);

/// One q-reduced divisor per class of degree d, sorted lexicographically.
/// The list has exactly |Jac(G)| entries.
std::vector<Divisor> picard_representatives(const Multigraph& g, std::int64_t degree,
                                            Vertex base = kDefaultBase);

}  // namespace bng

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bngraph/multigraph.hpp"

namespace bng {

/// Integer combination of the vertices of one specific graph.
///
/// Coefficients are stored densely; vertices not mentioned are zero.
/// Arithmetic between divisors on different graphs throws ValidationError.
class Divisor {
 public:
  explicit Divisor(Multigraph graph);
  Divisor(Multigraph graph, std::vector<std::int64_t> coefficients);

  /// The divisor 1*v.
  static Divisor point(const Multigraph& graph, Vertex v);

  [[nodiscard]] const Multigraph& graph() const { return graph_; }
  [[nodiscard]] std::span<const std::int64_t> coefficients() const { return coeffs_; }
  [[nodiscard]] int size() const { return static_cast<int>(coeffs_.size()); }

  [[nodiscard]] std::int64_t at(Vertex v) const;
  std::int64_t& operator[](Vertex v) { return coeffs_[static_cast<std::size_t>(v)]; }
  std::int64_t operator[](Vertex v) const { return coeffs_[static_cast<std::size_t>(v)]; }

  [[nodiscard]] std::int64_t degree() const;
  [[nodiscard]] bool is_effective() const;
  [[nodiscard]] bool is_zero() const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  Divisor& operator*=(std::int64_t k);
  Divisor operator-() const;

  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(std::int64_t k, Divisor a) { return a *= k; }

  /// Same graph and identical coefficients.
  bool operator==(const Divisor& other) const;

  /// Lexicographic order on coefficients; only meaningful on one graph.
  bool operator<(const Divisor& other) const { return coeffs_ < other.coeffs_; }

 private:
  void require_same_graph(const Divisor& other) const;

  Multigraph graph_;
  std::vector<std::int64_t> coeffs_;
};

/// Integer-valued function on vertices.
struct VertexFunction {
  std::vector<std::int64_t> values;

  static VertexFunction indicator(const Multigraph& g, Vertex v);
  bool operator==(const VertexFunction&) const = default;
};

/// div(f): the coefficient at v is sum_w (v.w) f(w). Always degree 0.
Divisor div_of(const Multigraph& g, const VertexFunction& f);

/// div of the indicator of v.
Divisor twister(const Multigraph& g, Vertex v);

struct PrincipalityResult {
  bool principal = false;
  /// f with div(f) = D, normalized by f(base) = 0; set iff principal.
  std::optional<VertexFunction> witness;
};

/// Decides D in Prin by exact rational elimination on the reduced
/// Laplacian followed by an integrality check. Shares no code with the
/// chip-firing reduction.
PrincipalityResult is_principal(const Divisor& d, Vertex base = 0);

inline constexpr Vertex kDefaultBase = 0;

/// Vertices that survive the burning test: empty iff d is q-reduced
/// (given d(v) >= 0 off q). A vertex catches fire once the number of
/// edges joining it to burnt vertices exceeds its chip count.
std::vector<Vertex> unburnt_set(const Divisor& d, Vertex q);

/// True iff d(v) >= 0 for v != q and no nonempty set avoiding q can fire.
bool is_reduced(const Divisor& d, Vertex q);

/// The unique q-reduced divisor linearly equivalent to d.
Divisor reduce(const Divisor& d, Vertex q = kDefaultBase);

/// d1 ~ d2, decided by comparing q-reduced forms.
bool equivalent(const Divisor& d1, const Divisor& d2, Vertex q = kDefaultBase);

/// |d| is nonempty.
bool has_effective_representative(const Divisor& d, Vertex q = kDefaultBase);

/// K = sum_v (deg(v) - 2) v, degree 2g - 2.
Divisor canonical_divisor(const Multigraph& g);

/// Pushes d forward along the vertex inclusion of a refinement.
Divisor transport(const RefinementMap& map, const Divisor& d);

}  // namespace bng

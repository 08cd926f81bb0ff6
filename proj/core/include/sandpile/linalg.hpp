#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sandpile/graph.hpp"
#include "sandpile/numeric.hpp"

namespace sandpile {

/// L with L(v,v) = d(v) and L(v,w) = -#(v,w). Indexed by vertex.
IntMatrix laplacian(const Multigraph& g);

/// L with the sink row and column deleted. Indexed by position.
IntMatrix reduced_laplacian(const Multigraph& g);

/// Deletes the listed rows and columns. Duplicates in an index set are ignored.
IntMatrix minor_matrix(const IntMatrix& m, std::span<const std::size_t> delete_rows,
                       std::span<const std::size_t> delete_cols);

/// Determinant by fraction-free (Bareiss) elimination. The 0x0 determinant is 1.
BigInt det_exact(const IntMatrix& m);

/// Exact rational solution of m x = b.
RatVector solve_exact(const IntMatrix& m, const RatVector& b);

/// Exact inverse, one solve per unit column.
RatMatrix inverse_exact(const IntMatrix& m);

struct OrientedEdge {
  std::size_t tail = 0;
  std::size_t head = 0;
};

/// |E| x |V| incidence matrix: row e has -1 at tail(e) and +1 at head(e).
IntMatrix incidence(std::size_t vertex_count, std::span<const OrientedEdge> edges);

/// Incidence matrix for g's edge multiset with every edge oriented from the
/// lower to the higher vertex index.
IntMatrix incidence(const Multigraph& g);

/// L' together with its determinant and inverse, computed once and reused
/// across many sandpiles on the same graph.
class ReducedLaplacian {
 public:
  explicit ReducedLaplacian(const Multigraph& g);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  const BigInt& det() const noexcept { return det_; }
  const RatMatrix& inverse() const noexcept { return inverse_; }

  /// L' u for an integer vector.
  IntVector apply(const IntVector& u) const { return matrix_ * u; }
  /// (L')^{-1} b.
  RatVector solve(const IntVector& b) const;

 private:
  IntMatrix matrix_;
  BigInt det_;
  RatMatrix inverse_;
};

}  // namespace sandpile

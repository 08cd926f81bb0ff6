#include "sandpile/linalg.hpp"

#include <algorithm>

namespace sandpile {

namespace {

std::vector<bool> deletion_mask(std::size_t n, std::span<const std::size_t> indices) {
  std::vector<bool> mask(n, false);
  for (auto i : indices) {
    if (i >= n) throw Error(ErrorCode::IndexOutOfRange, "deletion index " + std::to_string(i) + " out of range");
    mask[i] = true;
  }
  return mask;
}

}  // namespace

IntMatrix laplacian(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix l(n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      l(v, w) = v == w ? BigInt(static_cast<unsigned long>(g.degree(v)))
                       : -BigInt(static_cast<unsigned long>(g.multiplicity(v, w)));
  return l;
}

IntMatrix reduced_laplacian(const Multigraph& g) {
  const std::size_t s = g.sink();
  return minor_matrix(laplacian(g), std::span<const std::size_t>(&s, 1), std::span<const std::size_t>(&s, 1));
}

IntMatrix minor_matrix(const IntMatrix& m, std::span<const std::size_t> delete_rows,
                       std::span<const std::size_t> delete_cols) {
  const auto row_mask = deletion_mask(m.rows(), delete_rows);
  const auto col_mask = deletion_mask(m.cols(), delete_cols);
  std::vector<std::size_t> keep_r, keep_c;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!row_mask[r]) keep_r.push_back(r);
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!col_mask[c]) keep_c.push_back(c);

  IntMatrix out(keep_r.size(), keep_c.size());
  for (std::size_t i = 0; i < keep_r.size(); ++i)
    for (std::size_t j = 0; j < keep_c.size(); ++j) out(i, j) = m(keep_r[i], keep_c[j]);
  return out;
}

BigInt det_exact(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  IntMatrix a = m;
  BigInt prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatVector solve_exact(const IntMatrix& m, const RatVector& b) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "solve with a non-square matrix");
  const std::size_t n = m.rows();
  if (b.size() != n) throw Error(ErrorCode::SizeMismatch, "right-hand side has the wrong length");

  RatMatrix a = to_rational(m);
  RatVector x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      std::swap(x[k], x[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t c = k + 1; c < n; ++c) x[k] -= a(k, c) * x[c];
    x[k] /= a(k, k);
  }
  return x;
}

RatMatrix inverse_exact(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RatVector e(n);
    e[c] = 1;
    const auto col = solve_exact(m, e);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

IntMatrix incidence(std::size_t vertex_count, std::span<const OrientedEdge> edges) {
  IntMatrix b(edges.size(), vertex_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [tail, head] = edges[e];
    if (tail >= vertex_count || head >= vertex_count)
      throw Error(ErrorCode::IndexOutOfRange, "incidence edge endpoint out of range");
    if (tail == head) throw Error(ErrorCode::SelfLoop, "incidence edge is a self-loop");
    b(e, tail) = -1;
    b(e, head) = 1;
  }
  return b;
}

IntMatrix incidence(const Multigraph& g) {
  std::vector<OrientedEdge> oriented;
  for (const auto& [v, w] : g.edge_multiset()) oriented.push_back({v, w});
  return incidence(g.vertex_count(), oriented);
}

ReducedLaplacian::ReducedLaplacian(const Multigraph& g)
    : matrix_(reduced_laplacian(g)), det_(det_exact(matrix_)), inverse_(inverse_exact(matrix_)) {}

RatVector ReducedLaplacian::solve(const IntVector& b) const { return inverse_ * to_rational(b); }

}  // namespace sandpile

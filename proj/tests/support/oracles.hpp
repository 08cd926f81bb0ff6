#pragma once

// Test-only oracles. Nothing here calls the library routine it is used to
// check: determinants by cofactor expansion, odometers by exhaustive search.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "sandpile/graph.hpp"
#include "sandpile/numeric.hpp"

namespace sandpile::testing {

/// Laplace expansion along the first row.
inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) sub(r - 1, kk++) = m(r, k);
    const BigInt term = m(0, c) * cofactor_det(sub);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

/// Cramer's rule on a principal submatrix, using cofactor determinants.
inline std::optional<RatVector> cramer_solve(const IntMatrix& a, const IntVector& b) {
  const std::size_t n = a.rows();
  const BigInt det = cofactor_det(a);
  if (det == 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix aj = a;
    for (std::size_t i = 0; i < n; ++i) aj(i, j) = b[i];
    Rational q(cofactor_det(aj), det);
    q.canonicalize();
    x[j] = q;
  }
  return x;
}

/// Least element of {u >= 0 : L' u >= c} by trying every support S: solve
/// the equalities on S with u = 0 off S and keep the feasible candidates.
/// Returns the candidate that is componentwise below all others.
inline RatVector exhaustive_least_real(const IntMatrix& lap, const IntVector& c) {
  const std::size_t n = c.size();
  std::vector<RatVector> feasible;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    RatVector u(n);
    if (!s.empty()) {
      IntMatrix sub(s.size(), s.size());
      IntVector rhs(s.size());
      for (std::size_t a = 0; a < s.size(); ++a) {
        rhs[a] = c[s[a]];
        for (std::size_t b = 0; b < s.size(); ++b) sub(a, b) = lap(s[a], s[b]);
      }
      auto sol = cramer_solve(sub, rhs);
      if (!sol) continue;
      for (std::size_t a = 0; a < s.size(); ++a) u[s[a]] = (*sol)[a];
    }
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (u[i] < 0) ok = false;
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += Rational(lap(i, j)) * u[j];
      if (lhs < Rational(c[i])) ok = false;
    }
    if (ok) feasible.push_back(std::move(u));
  }
  for (const auto& cand : feasible) {
    bool least = true;
    for (const auto& other : feasible) least = least && leq(cand, other);
    if (least) return cand;
  }
  return {};
}

/// Least integer u >= 0 with L' u >= c by scanning the box [0, bound]^n.
inline std::optional<IntVector> brute_least_integer(const IntMatrix& lap, const IntVector& c, long bound) {
  const std::size_t n = c.size();
  std::vector<long> u(n, 0);
  std::vector<IntVector> feasible;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      BigInt lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += lap(i, j) * u[j];
      ok = lhs >= c[i];
    }
    if (ok) {
      IntVector v;
      for (auto x : u) v.emplace_back(x);
      feasible.push_back(std::move(v));
    }
    std::size_t k = 0;
    while (k < n && u[k] == bound) u[k++] = 0;
    if (k == n) break;
    ++u[k];
  }
  for (const auto& cand : feasible) {
    bool least = true;
    for (const auto& other : feasible) least = least && leq(cand, other);
    if (least) return cand;
  }
  return std::nullopt;
}

/// Every connected simple graph on vertices 0..n-1 (labeled), sink 0.
inline std::vector<Multigraph> simple_connected_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w) pairs.emplace_back(v, w);
  std::vector<Multigraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back({pairs[i].first, pairs[i].second, 1});
    try {
      out.push_back(Multigraph::from_edge_list(n, 0, edges));
    } catch (const Error&) {
      // disconnected
    }
  }
  return out;
}

/// All connected simple graphs with 2..max_vertices vertices.
inline std::vector<Multigraph> simple_graph_family(std::size_t max_vertices) {
  std::vector<Multigraph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    auto batch = simple_connected_graphs(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

/// Random connected multigraphs: a random spanning tree plus extra random
/// edges, multiplicities in [1, max_mult], random sink.
inline std::vector<Multigraph> random_multigraphs(std::size_t count, std::size_t min_vertices,
                                                  std::size_t max_vertices, std::size_t max_mult,
                                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Multigraph> out;
  while (out.size() < count) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(min_vertices, max_vertices)(rng);
    std::uniform_int_distribution<std::size_t> mult(1, max_mult);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v)
      edges.push_back({std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v, mult(rng)});
    const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, n)(rng);
    for (std::size_t e = 0; e < extra; ++e) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      const auto a = pick(rng), b = pick(rng);
      if (a != b) edges.push_back({a, b, mult(rng)});
    }
    // Cap each pair at max_mult.
    std::vector<std::size_t> total(n * n, 0);
    std::vector<Edge> capped;
    for (const auto& e : edges) {
      auto& t = total[std::min(e.v, e.w) * n + std::max(e.v, e.w)];
      const auto room = max_mult - std::min(max_mult, t);
      const auto take = std::min(room, e.multiplicity);
      if (take == 0) continue;
      t += take;
      capped.push_back({e.v, e.w, take});
    }
    const std::size_t sink = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    out.push_back(Multigraph::from_edge_list(n, sink, capped));
  }
  return out;
}

/// Calls fn on every integer vector with lo[i] <= x[i] <= hi[i].
inline void for_each_in_box(const IntVector& lo, const IntVector& hi, const std::function<void(const IntVector&)>& fn) {
  IntVector x = lo;
  const std::size_t n = lo.size();
  for (;;) {
    fn(x);
    std::size_t k = 0;
    while (k < n && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == n) return;
    x[k] += 1;
  }
}

}  // namespace sandpile::testing

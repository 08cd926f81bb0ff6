#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sandpile/numeric.hpp"

namespace sandpile {

struct Edge {
  std::size_t v = 0;
  std::size_t w = 0;
  std::size_t multiplicity = 1;
};

/// Finite connected multigraph without self-loops and with a designated sink.
///
/// Vertices are 0..vertex_count()-1. The sink is stored explicitly and need
/// not be vertex 0. Vectors over the non-sink vertices (sandpiles,
/// odometers, rows of the reduced Laplacian) are indexed by *position*: the
/// rank of the vertex among non-sink vertices in ascending order.
///
/// Immutable after construction.
class Multigraph {
 public:
  static Multigraph from_edge_list(std::size_t n_vertices, std::size_t sink,
                                   std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t non_sink_count() const noexcept { return n_ - 1; }
  std::size_t sink() const noexcept { return sink_; }

  std::size_t multiplicity(std::size_t v, std::size_t w) const { return mult_[v * n_ + w]; }
  std::size_t degree(std::size_t v) const { return degree_[v]; }

  /// Non-sink vertices in ascending order; entry p is the vertex at position p.
  const std::vector<std::size_t>& non_sink_vertices() const noexcept { return non_sink_; }
  std::size_t vertex_at(std::size_t position) const { return non_sink_.at(position); }
  /// Position of a non-sink vertex. Throws SinkNotAllowed for the sink.
  std::size_t position_of(std::size_t vertex) const;

  /// Distinct adjacent pairs v < w with their multiplicities, lexicographic.
  std::vector<Edge> edges() const;
  /// Every parallel edge listed separately, oriented lower -> higher index.
  std::vector<std::pair<std::size_t, std::size_t>> edge_multiset() const;
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// d(v) for every non-sink v, indexed by position.
  IntVector degree_vector() const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.sink_ == b.sink_ && a.mult_ == b.mult_;
  }

 private:
  Multigraph() = default;

  std::size_t n_ = 0;
  std::size_t sink_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> non_sink_;
};

/// Non-negative integer labeling of the non-sink vertices, indexed by position.
class Sandpile {
 public:
  explicit Sandpile(IntVector values);
  Sandpile(const Multigraph& g, IntVector values);

  const IntVector& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const BigInt& operator[](std::size_t position) const { return values_[position]; }

  friend bool operator==(const Sandpile&, const Sandpile&) = default;

 private:
  IntVector values_;
};

// Standard families. Unless noted the sink is vertex 0.

/// P_k: vertices 0..k-1 in a line, sink at the endpoint 0.
Multigraph path(std::size_t k);
/// K_m.
Multigraph complete(std::size_t m);
/// C_k: vertices 0..k-1 in cyclic order.
Multigraph cycle(std::size_t k);
/// W_m: hub 0 is the sink; rim vertices 1..m-1 in cyclic order, so rim
/// label v_i (i taken mod m-1, with v_0 = v_{m-1}) is vertex ((i-1) mod (m-1)) + 1.
Multigraph wheel(std::size_t m);
/// Two vertices joined by k parallel edges.
Multigraph banana(std::size_t k);
/// Star with `leaves` leaves; the centre 0 is the sink.
Multigraph star(std::size_t leaves);
/// Adds an apex adjacent once to every vertex of g; the apex (new last
/// vertex) becomes the sink. g's own sink designation is discarded.
Multigraph cone(const Multigraph& g);

/// The sink is joined by a single edge to every other vertex, and all
/// non-sink vertices have equal degree.
bool is_cone_of_regular(const Multigraph& g);

/// True if g has exactly vertex_count()-1 edges (counted with multiplicity).
bool is_tree(const Multigraph& g);

}  // namespace sandpile

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sandpile/graph.hpp"
#include "sandpile/numeric.hpp"

namespace sandpile {

// Brute-force spanning forest enumeration. Every function here walks edge
// subsets of the edge multiset (parallel edges are distinct) and serves as
// the determinant-free oracle for the matrix-tree identities. Enumeration
// refuses to start when the number of candidate subsets exceeds 2^31.

struct ForestTree {
  std::vector<std::size_t> vertices;  // ascending
  std::vector<std::size_t> edges;     // indices into g.edge_multiset(), ascending
  friend bool operator==(const ForestTree&, const ForestTree&) = default;
};

/// Trees ordered by their minimum vertex, giving each forest a unique form.
struct SpanningForest {
  std::vector<ForestTree> trees;
  friend bool operator==(const SpanningForest&, const SpanningForest&) = default;
};

inline constexpr std::uint64_t kMaxEdgeSubsets = std::uint64_t{1} << 31;

/// Number of edge subsets the enumerator would visit for forests with
/// `components` trees; saturates at UINT64_MAX.
std::uint64_t candidate_subsets(const Multigraph& g, std::size_t components);

/// All spanning forests with exactly `components` trees.
std::vector<SpanningForest> enumerate_spanning_forests(const Multigraph& g, std::size_t components);

BigInt count_spanning_trees(const Multigraph& g);

/// Spanning |V|-forests in which every tree holds exactly one vertex of V
/// and exactly one vertex of W.
BigInt count_constrained_forests(const Multigraph& g, std::span<const std::size_t> V,
                                 std::span<const std::size_t> W);

/// Sum over the same forests of the sign of the V -> W matching they induce
/// (V and W each read in ascending order). Together with the index parity
/// this gives the signed all-minors identity
///   det(L^V_W) = (-1)^{sum V + sum W} * signed_forest_sum(g, V, W).
BigInt signed_forest_sum(const Multigraph& g, std::span<const std::size_t> V,
                         std::span<const std::size_t> W);

/// Ordered 2-forests (T0, T1) with the sink in T0 and both v and w in T1.
BigInt count_S2(const Multigraph& g, std::size_t v, std::size_t w);

/// (-1)^{sum V + sum W} when at least one constrained forest exists, else 0.
int sign_of_minor(const Multigraph& g, std::span<const std::size_t> V, std::span<const std::size_t> W);

/// Constrained-forest statistics for one (V, W) pair, as bitmasks over vertices.
struct ForestTally {
  BigInt count;
  BigInt signed_sum;
};

/// Single pass over all forests with `complement` edges, tallied for every
/// (V, W) pair with |V| = |W| = vertex_count - complement. Keys are vertex
/// bitmasks (V, W). Pairs with no forest are absent. Requires vertex_count <= 64.
std::map<std::pair<std::uint64_t, std::uint64_t>, ForestTally> tally_constrained_forests(
    const Multigraph& g, std::size_t complement);

}  // namespace sandpile

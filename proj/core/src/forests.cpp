#include "sandpile/forests.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace sandpile {

namespace {

/// Union-find with rollback: union by size, no path compression.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void rollback() {
    const std::size_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

using ForestVisitor = std::function<void(const std::vector<std::size_t>& edges, const RollbackUnionFind& uf)>;

void check_budget(const Multigraph& g, std::size_t components) {
  if (candidate_subsets(g, components) > kMaxEdgeSubsets)
    throw Error(ErrorCode::TooLarge, "forest enumeration would visit more than 2^31 edge subsets");
}

/// Visits every acyclic edge subset of size vertex_count - components.
void for_each_forest(const Multigraph& g, std::size_t components, const ForestVisitor& visit) {
  check_budget(g, components);
  const std::size_t n = g.vertex_count();
  if (components == 0 || components > n) return;
  const std::size_t need = n - components;
  const auto edges = g.edge_multiset();
  const std::size_t m = edges.size();

  RollbackUnionFind uf(n);
  std::vector<std::size_t> chosen;
  chosen.reserve(need);

  std::function<void(std::size_t)> recurse = [&](std::size_t next) {
    if (chosen.size() == need) {
      visit(chosen, uf);
      return;
    }
    for (std::size_t e = next; e + (need - chosen.size()) <= m; ++e) {
      if (!uf.unite(edges[e].first, edges[e].second)) continue;
      chosen.push_back(e);
      recurse(e + 1);
      chosen.pop_back();
      uf.rollback();
    }
  };
  recurse(0);
}

std::vector<std::size_t> normalized_set(const Multigraph& g, std::span<const std::size_t> s) {
  std::vector<std::size_t> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  for (auto v : out)
    if (v >= g.vertex_count()) throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " out of range");
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(ErrorCode::SizeMismatch, "vertex set contains duplicates");
  return out;
}

/// Parity of the permutation p (0 = even).
int permutation_parity(std::vector<std::size_t> p) {
  int parity = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      parity ^= 1;
    }
  return parity;
}

/// If every component of uf holds exactly one vertex of V and one of W,
/// returns the V -> W matching as a permutation of ranks.
bool constrained_matching(const RollbackUnionFind& uf, const std::vector<std::size_t>& V,
                          const std::vector<std::size_t>& W, std::vector<std::size_t>& matching) {
  matching.assign(V.size(), 0);
  for (std::size_t i = 0; i < V.size(); ++i) {
    const auto root = uf.find(V[i]);
    for (std::size_t k = 0; k < i; ++k)
      if (uf.find(V[k]) == root) return false;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < W.size(); ++j)
      if (uf.find(W[j]) == root) {
        matching[i] = j;
        ++hits;
      }
    if (hits != 1) return false;
  }
  // |V| components each own one V vertex, so every tree is covered.
  return true;
}

}  // namespace

std::uint64_t candidate_subsets(const Multigraph& g, std::size_t components) {
  const std::size_t n = g.vertex_count();
  if (components == 0 || components > n) return 0;
  const std::uint64_t m = g.edge_count();
  std::uint64_t k = n - components;
  if (k > m) return 0;
  k = std::min(k, m - k);
  // C(m, k) computed incrementally; every prefix product is itself a binomial.
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (m - k + i) / i;
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<SpanningForest> enumerate_spanning_forests(const Multigraph& g, std::size_t components) {
  std::vector<SpanningForest> out;
  const std::size_t n = g.vertex_count();
  const auto multiset = g.edge_multiset();
  for_each_forest(g, components, [&](const std::vector<std::size_t>& edges, const RollbackUnionFind& uf) {
    std::vector<std::size_t> root_slot(n, n);
    SpanningForest f;
    for (std::size_t v = 0; v < n; ++v) {
      const auto r = uf.find(v);
      if (root_slot[r] == n) {
        root_slot[r] = f.trees.size();
        f.trees.emplace_back();
      }
      f.trees[root_slot[r]].vertices.push_back(v);
    }
    for (auto e : edges) f.trees[root_slot[uf.find(multiset[e].first)]].edges.push_back(e);
    out.push_back(std::move(f));
  });
  return out;
}

BigInt count_spanning_trees(const Multigraph& g) {
  BigInt count = 0;
  for_each_forest(g, 1, [&](const auto&, const auto&) { ++count; });
  return count;
}

BigInt count_constrained_forests(const Multigraph& g, std::span<const std::size_t> V,
                                 std::span<const std::size_t> W) {
  if (V.size() != W.size()) throw Error(ErrorCode::SizeMismatch, "|V| != |W|");
  const auto vs = normalized_set(g, V);
  const auto ws = normalized_set(g, W);
  BigInt count = 0;
  if (vs.empty()) return count;
  std::vector<std::size_t> matching;
  for_each_forest(g, vs.size(), [&](const auto&, const RollbackUnionFind& uf) {
    if (constrained_matching(uf, vs, ws, matching)) ++count;
  });
  return count;
}

BigInt signed_forest_sum(const Multigraph& g, std::span<const std::size_t> V,
                         std::span<const std::size_t> W) {
  if (V.size() != W.size()) throw Error(ErrorCode::SizeMismatch, "|V| != |W|");
  const auto vs = normalized_set(g, V);
  const auto ws = normalized_set(g, W);
  BigInt sum = 0;
  if (vs.empty()) return sum;
  std::vector<std::size_t> matching;
  for_each_forest(g, vs.size(), [&](const auto&, const RollbackUnionFind& uf) {
    if (constrained_matching(uf, vs, ws, matching)) sum += permutation_parity(matching) == 0 ? 1 : -1;
  });
  return sum;
}

BigInt count_S2(const Multigraph& g, std::size_t v, std::size_t w) {
  if (v >= g.vertex_count() || w >= g.vertex_count())
    throw Error(ErrorCode::IndexOutOfRange, "vertex out of range");
  if (v == g.sink() || w == g.sink()) throw Error(ErrorCode::SinkNotAllowed, "S2 is defined on non-sink vertices");
  BigInt count = 0;
  const auto sink = g.sink();
  for_each_forest(g, 2, [&](const auto&, const RollbackUnionFind& uf) {
    const auto t1 = uf.find(v);
    if (uf.find(w) == t1 && uf.find(sink) != t1) ++count;
  });
  return count;
}

int sign_of_minor(const Multigraph& g, std::span<const std::size_t> V, std::span<const std::size_t> W) {
  if (V.size() != W.size()) throw Error(ErrorCode::SizeMismatch, "|V| != |W|");
  if (count_constrained_forests(g, V, W) == 0) return 0;
  std::size_t parity = 0;
  for (auto v : V) parity += v;
  for (auto w : W) parity += w;
  return parity % 2 == 0 ? 1 : -1;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, ForestTally> tally_constrained_forests(
    const Multigraph& g, std::size_t complement) {
  const std::size_t n = g.vertex_count();
  if (n > 64) throw Error(ErrorCode::TooLarge, "tally requires at most 64 vertices");
  std::map<std::pair<std::uint64_t, std::uint64_t>, ForestTally> tally;
  if (complement >= n) return tally;
  const std::size_t components = n - complement;

  for_each_forest(g, components, [&](const auto&, const RollbackUnionFind& uf) {
    // Group vertices by tree; trees ordered by minimum vertex.
    std::vector<std::vector<std::size_t>> trees;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto r = uf.find(v);
      if (slot[r] == n) {
        slot[r] = trees.size();
        trees.emplace_back();
      }
      trees[slot[r]].push_back(v);
    }

    // Every transversal picks one vertex per tree.
    std::vector<std::vector<std::size_t>> transversals{{}};
    for (const auto& tree : trees) {
      std::vector<std::vector<std::size_t>> next;
      for (const auto& partial : transversals)
        for (auto v : tree) {
          next.push_back(partial);
          next.back().push_back(v);
        }
      transversals = std::move(next);
    }

    struct Choice {
      std::uint64_t mask;
      std::vector<std::size_t> rank;  // rank of the chosen vertex of tree t within the set
    };
    std::vector<Choice> choices;
    choices.reserve(transversals.size());
    for (const auto& t : transversals) {
      Choice c{0, std::vector<std::size_t>(t.size())};
      for (auto v : t) c.mask |= std::uint64_t{1} << v;
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::size_t r = 0;
        for (auto u : t)
          if (u < t[i]) ++r;
        c.rank[i] = r;
      }
      choices.push_back(std::move(c));
    }

    std::vector<std::size_t> perm(components);
    for (const auto& cv : choices)
      for (const auto& cw : choices) {
        for (std::size_t t = 0; t < components; ++t) perm[cv.rank[t]] = cw.rank[t];
        auto& entry = tally[{cv.mask, cw.mask}];
        ++entry.count;
        entry.signed_sum += permutation_parity(perm) == 0 ? 1 : -1;
      }
  });
  return tally;
}

}  // namespace sandpile

#include "sandpile/graph.hpp"

#include <numeric>
#include <string>

namespace sandpile {

namespace {

std::string vertex_str(std::size_t v) { return std::to_string(v); }

}  // namespace

Multigraph Multigraph::from_edge_list(std::size_t n_vertices, std::size_t sink,
                                      std::span<const Edge> edges) {
  if (n_vertices == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (n_vertices < 2) throw Error(ErrorCode::SizeTooSmall, "graph needs a sink and at least one other vertex");
  if (sink >= n_vertices)
    throw Error(ErrorCode::IndexOutOfRange, "sink " + vertex_str(sink) + " out of range");

  Multigraph g;
  g.n_ = n_vertices;
  g.sink_ = sink;
  g.mult_.assign(n_vertices * n_vertices, 0);
  for (const auto& e : edges) {
    if (e.v >= n_vertices || e.w >= n_vertices)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + vertex_str(e.v) + "," + vertex_str(e.w) + ") out of range");
    if (e.multiplicity == 0)
      throw Error(ErrorCode::IndexOutOfRange, "edge multiplicity must be at least 1");
    if (e.v == e.w) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + vertex_str(e.v));
    g.mult_[e.v * n_vertices + e.w] += e.multiplicity;
    g.mult_[e.w * n_vertices + e.v] += e.multiplicity;
    g.edge_count_ += e.multiplicity;
  }

  g.degree_.assign(n_vertices, 0);
  for (std::size_t v = 0; v < n_vertices; ++v)
    for (std::size_t w = 0; w < n_vertices; ++w) g.degree_[v] += g.mult_[v * n_vertices + w];

  // Connectivity by DFS from the sink.
  std::vector<bool> seen(n_vertices, false);
  std::vector<std::size_t> stack{sink};
  seen[sink] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n_vertices; ++w)
      if (g.mult_[v * n_vertices + w] != 0 && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  for (std::size_t v = 0; v < n_vertices; ++v)
    if (!seen[v]) throw Error(ErrorCode::Disconnected, "vertex " + vertex_str(v) + " is not connected to the sink");

  for (std::size_t v = 0; v < n_vertices; ++v)
    if (v != sink) g.non_sink_.push_back(v);
  return g;
}

std::size_t Multigraph::position_of(std::size_t vertex) const {
  if (vertex >= n_) throw Error(ErrorCode::IndexOutOfRange, "vertex " + vertex_str(vertex) + " out of range");
  if (vertex == sink_) throw Error(ErrorCode::SinkNotAllowed, "the sink has no position");
  return vertex < sink_ ? vertex : vertex - 1;
}

std::vector<Edge> Multigraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < n_; ++v)
    for (std::size_t w = v + 1; w < n_; ++w)
      if (const auto m = multiplicity(v, w); m != 0) out.push_back({v, w, m});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Multigraph::edge_multiset() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (const auto& e : edges())
    for (std::size_t k = 0; k < e.multiplicity; ++k) out.emplace_back(e.v, e.w);
  return out;
}

IntVector Multigraph::degree_vector() const {
  IntVector d;
  d.reserve(non_sink_.size());
  for (auto v : non_sink_) d.emplace_back(static_cast<unsigned long>(degree_[v]));
  return d;
}

Sandpile::Sandpile(IntVector values) : values_(std::move(values)) {
  for (std::size_t p = 0; p < values_.size(); ++p)
    if (values_[p] < 0)
      throw Error(ErrorCode::InvalidSandpile,
                  "sandpile value at position " + std::to_string(p) + " is negative");
}

Sandpile::Sandpile(const Multigraph& g, IntVector values) : Sandpile(std::move(values)) {
  if (values_.size() != g.non_sink_count())
    throw Error(ErrorCode::SizeMismatch, "sandpile has " + std::to_string(values_.size()) +
                                             " values but the graph has " +
                                             std::to_string(g.non_sink_count()) + " non-sink vertices");
}

Multigraph path(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::SizeTooSmall, "path needs k >= 2");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < k; ++v) edges.push_back({v, v + 1, 1});
  return Multigraph::from_edge_list(k, 0, edges);
}

Multigraph complete(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::SizeTooSmall, "complete graph needs m >= 2");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t w = v + 1; w < m; ++w) edges.push_back({v, w, 1});
  return Multigraph::from_edge_list(m, 0, edges);
}

Multigraph cycle(std::size_t k) {
  if (k < 3) throw Error(ErrorCode::SizeTooSmall, "cycle needs k >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < k; ++v) edges.push_back({v, (v + 1) % k, 1});
  return Multigraph::from_edge_list(k, 0, edges);
}

Multigraph wheel(std::size_t m) {
  if (m < 4) throw Error(ErrorCode::SizeTooSmall, "wheel needs m >= 4");
  const std::size_t rim = m - 1;
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= rim; ++i) {
    edges.push_back({0, i, 1});
    edges.push_back({i, i % rim + 1, 1});
  }
  return Multigraph::from_edge_list(m, 0, edges);
}

Multigraph banana(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::SizeTooSmall, "banana graph needs k >= 1");
  const Edge e{0, 1, k};
  return Multigraph::from_edge_list(2, 0, std::span<const Edge>(&e, 1));
}

Multigraph star(std::size_t leaves) {
  if (leaves < 1) throw Error(ErrorCode::SizeTooSmall, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v <= leaves; ++v) edges.push_back({0, v, 1});
  return Multigraph::from_edge_list(leaves + 1, 0, edges);
}

Multigraph cone(const Multigraph& g) {
  const std::size_t apex = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  for (std::size_t v = 0; v < apex; ++v) edges.push_back({v, apex, 1});
  return Multigraph::from_edge_list(apex + 1, apex, edges);
}

bool is_cone_of_regular(const Multigraph& g) {
  const auto& vs = g.non_sink_vertices();
  for (auto v : vs)
    if (g.multiplicity(g.sink(), v) != 1) return false;
  for (auto v : vs)
    if (g.degree(v) != g.degree(vs.front())) return false;
  return true;
}

bool is_tree(const Multigraph& g) { return g.edge_count() + 1 == g.vertex_count(); }

}  // namespace sandpile

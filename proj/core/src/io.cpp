#include "sandpile/io.hpp"

#include <charconv>
#include <limits>

namespace sandpile::io {

namespace {

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::ParseError, "invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::size_t get_index(const json& j, std::string_view what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

BigInt json_to_int(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    BigInt z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::ParseError, "invalid integer string '" + j.get<std::string>() + "'");
    return z;
  }
  throw Error(ErrorCode::ParseError, "expected an integer");
}

}  // namespace

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.v, e.w, e.multiplicity});
  return {{"vertices", g.vertex_count()}, {"sink", g.sink()}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("sink") || !j.contains("edges"))
    throw Error(ErrorCode::ParseError, "graph JSON needs \"vertices\", \"sink\", and \"edges\"");
  const auto n = get_index(j.at("vertices"), "vertices");
  const auto sink = get_index(j.at("sink"), "sink");
  if (!j.at("edges").is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorCode::ParseError, "each edge must be [v, w, mult]");
    edges.push_back({get_index(e[0], "edge endpoint"), get_index(e[1], "edge endpoint"),
                     get_index(e[2], "edge multiplicity")});
  }
  return Multigraph::from_edge_list(n, sink, edges);
}

json sandpile_to_json(const Sandpile& s) { return {{"values", int_vector_to_json(s.values())}}; }

Sandpile sandpile_from_json(const json& j) {
  if (!j.is_object() || !j.contains("values") || !j.at("values").is_array())
    throw Error(ErrorCode::ParseError, "sandpile JSON needs a \"values\" array");
  IntVector values;
  for (const auto& x : j.at("values")) values.push_back(json_to_int(x));
  return Sandpile(std::move(values));
}

IntVector parse_int_csv(std::string_view text) {
  IntVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    std::string token(text.substr(start, end - start));
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    BigInt z;
    if (token.empty() || z.set_str(token, 10) != 0)
      throw Error(ErrorCode::ParseError, "invalid integer '" + token + "' in list");
    out.push_back(std::move(z));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

json int_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

json int_vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(int_to_json(z));
  return out;
}

json rat_vector_to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json matrix_to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Multigraph parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "family must look like name:params, got '" + std::string(text) + "'");
  const auto name = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (name == "cone") return cone(parse_family(rest));
  const auto k = parse_size(rest, "family parameter");
  if (name == "path") return path(k);
  if (name == "complete") return complete(k);
  if (name == "cycle") return cycle(k);
  if (name == "wheel") return wheel(k);
  if (name == "banana") return banana(k);
  if (name == "star") return star(k);
  throw Error(ErrorCode::ParseError, "unknown graph family '" + std::string(name) + "'");
}

}  // namespace sandpile::io

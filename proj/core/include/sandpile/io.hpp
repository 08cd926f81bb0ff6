#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sandpile/graph.hpp"
#include "sandpile/numeric.hpp"

namespace sandpile::io {

using nlohmann::json;

/// {"vertices": n, "sink": s, "edges": [[v, w, mult], ...]} with v < w in
/// lexicographic order, so equal graphs serialize to identical bytes.
json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const json& j);

/// {"values": [...]} ordered by non-sink position.
json sandpile_to_json(const Sandpile& s);
Sandpile sandpile_from_json(const json& j);

/// Comma-separated integers, e.g. "2,0".
IntVector parse_int_csv(std::string_view text);

/// Integers as JSON numbers when they fit in 64 bits, otherwise decimal strings.
json int_to_json(const BigInt& z);
json int_vector_to_json(const IntVector& v);
/// Exact rationals as "p/q" strings ("p" when integral).
json rat_vector_to_json(const RatVector& v);
/// Arrays of arrays of decimal strings.
json matrix_to_json(const IntMatrix& m);
json matrix_to_json(const RatMatrix& m);

/// "path:k", "complete:m", "cycle:k", "wheel:m", "banana:k", "star:k",
/// "cone:<family>", e.g. "cone:cycle:4".
Multigraph parse_family(std::string_view text);

}  // namespace sandpile::io

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graphstab/fractional.hpp"
#include "graphstab/graph.hpp"

namespace graphstab::io {

/// A graph plus an optional matching, as stored in instance files:
/// {"vertices": [...], "edges": [{"u", "v", "w"}], "matching": [[u, v], ...]}.
struct Instance {
  WeightedGraph graph;
  std::optional<Matching> matching;
};

/// Throws Error{Errc::ParseError} (malformed document) or the graph's own
/// validation errors.
Instance parse_instance(const nlohmann::json& doc);
Instance parse_instance(const std::string& text);
Instance load_instance(const std::filesystem::path& path);

nlohmann::json emit_instance(const Instance& instance);

/// "sha256:<hex>" over the canonical serialization.
std::string instance_hash(const Instance& instance);

std::string fraction(const Rational& value);
nlohmann::json labels(const WeightedGraph& g, const std::vector<VertexId>& vertices);
nlohmann::json edge_pairs(const WeightedGraph& g, const std::vector<EdgeId>& edges);
nlohmann::json matching_pairs(const WeightedGraph& g, const Matching& m);
nlohmann::json cover_map(const WeightedGraph& g, const FractionalVertexCover& y);
/// Nonzero entries as [{"u", "v", "x"}].
nlohmann::json edge_values(const WeightedGraph& g, const EdgeValues& x);

/// Inverses used by certificate verification.
Matching parse_matching(const WeightedGraph& g, const nlohmann::json& pairs);
FractionalVertexCover parse_cover(const WeightedGraph& g, const nlohmann::json& map);
std::vector<VertexId> parse_vertices(const WeightedGraph& g, const nlohmann::json& list);
std::vector<EdgeId> parse_edges(const WeightedGraph& g, const nlohmann::json& pairs);

}  // namespace graphstab::io

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphstab/rational.hpp"

namespace graphstab {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId u;
  VertexId v;
  Rational weight;

  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
  bool touches(VertexId x) const noexcept { return x == u || x == v; }
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Simple undirected graph with nonnegative exact weights.
///
/// Vertices are dense indices 0..n-1; labels exist only for I/O. Incidence
/// lists are kept sorted by neighbor index so every scan in the library is
/// deterministic.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t vertex_count, std::vector<std::string> labels = {});

  /// Rejects loops, parallel edges, negative weights and out-of-range ends.
  EdgeId add_edge(VertexId u, VertexId v, Rational weight);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const noexcept;

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find_vertex(const std::string& label) const;

  /// G with every edge at a vertex of `removed` dropped. Vertex ids are kept
  /// so matchings and covers stay addressable; removed vertices end up isolated.
  WeightedGraph without_vertices(std::span<const VertexId> removed) const;
  /// G without the listed edges. Vertex ids are kept, edge ids are renumbered.
  WeightedGraph without_edges(std::span<const EdgeId> removed) const;

  /// Sum of w_e * values[e].
  Rational dot(std::span<const Rational> values) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A matching stored as a mate array, independent of edge numbering.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::size_t vertex_count) : mate_(vertex_count, kNoVertex) {}

  /// Throws Error{Errc::InvalidMatching} if two edges share a vertex.
  static Matching from_edges(const WeightedGraph& g, std::span<const EdgeId> edges);

  std::size_t vertex_count() const noexcept { return mate_.size(); }
  VertexId mate(VertexId v) const { return mate_.at(v); }
  bool is_exposed(VertexId v) const { return mate_.at(v) == kNoVertex; }
  bool contains(VertexId u, VertexId v) const {
    return u < mate_.size() && mate_[u] == v && v != kNoVertex;
  }
  std::size_t size() const noexcept;

  void match(VertexId u, VertexId v);
  void unmatch(VertexId v);

  /// Matched edges of g in increasing edge-id order. Throws
  /// Error{Errc::InvalidMatching} if a mate pair is not an edge of g.
  std::vector<EdgeId> edges(const WeightedGraph& g) const;
  Rational weight(const WeightedGraph& g) const;

  const std::vector<VertexId>& mates() const noexcept { return mate_; }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<VertexId> mate_;
};

/// True when M pairs vertices of g along existing edges and mates are symmetric.
bool is_matching_of(const WeightedGraph& g, const Matching& m);

}  // namespace graphstab

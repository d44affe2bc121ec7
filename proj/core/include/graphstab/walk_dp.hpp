#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/walk.hpp"

namespace graphstab {

/// A DP entry; std::nullopt stands for −∞ (no walk).
using WalkValue = std::optional<Rational>;

/// Table 1 holds walks whose last edge is unmatched (or the empty walk),
/// table 2 walks whose last edge is matched (or the empty walk at an exposed
/// source).
enum class WalkTable { Unmatched = 1, Matched = 2 };

struct WalkTables {
  struct Predecessor {
    VertexId neighbor = kNoVertex;
    WalkTable source = WalkTable::Unmatched;
    std::size_t iteration = 0;  // snapshot of the neighbor that was read
  };

  VertexId source = kNoVertex;
  std::size_t k = 0;
  std::size_t n = 0;
  /// Snapshots after iteration i = 0..k, stored row-major: [i * n + v].
  std::vector<WalkValue> table1;
  std::vector<WalkValue> table2;
  /// Set at [i * n + v] when iteration i strictly improved the entry.
  std::vector<std::optional<Predecessor>> pred1;
  std::vector<std::optional<Predecessor>> pred2;

  const WalkValue& y1(std::size_t i, VertexId v) const { return table1.at(i * n + v); }
  const WalkValue& y2(std::size_t i, VertexId v) const { return table2.at(i * n + v); }
  const WalkValue& entry(WalkTable t, std::size_t i, VertexId v) const {
    return t == WalkTable::Unmatched ? y1(i, v) : y2(i, v);
  }
  const std::optional<Predecessor>& predecessor(WalkTable t, std::size_t i, VertexId v) const {
    return (t == WalkTable::Unmatched ? pred1 : pred2).at(i * n + v);
  }
  const WalkValue& final_y1(VertexId v) const { return y1(k, v); }
  const WalkValue& final_y2(VertexId v) const { return y2(k, v); }
  /// Value of an optimal valid walk from the source ending at v: y2 when v
  /// is covered, y1 when v is exposed.
  const WalkValue& best_valid(const Matching& m, VertexId v) const {
    return m.is_exposed(v) ? final_y1(v) : final_y2(v);
  }
};

/// Optimal valid M-alternating walks of length at most k from s.
WalkTables optimal_walks(const WeightedGraph& g, const Matching& m, VertexId s, std::size_t k);

/// A walk from the source to v realizing the final entry of `table`.
/// Errors: EntryIsMinusInfinity.
AlternatingWalk reconstruct_walk(const WalkTables& t, VertexId v, WalkTable table);

struct StructureReport {
  bool flower_at_u = false;
  std::optional<VertexId> aug_path_to_covered;
  std::optional<VertexId> aug_path_to_exposed;
  /// Witnessing walks, reconstructed from the tables.
  std::optional<AlternatingWalk> flower_walk;
  std::optional<AlternatingWalk> covered_walk;
  std::optional<AlternatingWalk> exposed_walk;
};

/// Looks for augmenting walks from the exposed vertex u: uu-walks and walks
/// to covered vertices of length ≤ 3n, walks to other exposed vertices of
/// length ≤ n. `n` defaults to the number of vertices of g; pass the number
/// of surviving vertices when deleted vertices are kept as isolated ids.
/// Errors: VertexNotExposed.
StructureReport detect_structures(const WeightedGraph& g, const Matching& m, VertexId u,
                                  std::optional<std::size_t> n = std::nullopt);

struct WalkStructure {
  enum class Kind { AugmentingPath, AugmentingCycle, Flower, BiCycle };
  Kind kind;
  /// Path: the path. Cycle: the closed walk. Flower: blossom (closed at its
  /// base), then the stem from the base to the root. Bi-cycle: first
  /// blossom, connecting path, second blossom.
  std::vector<AlternatingWalk> parts;
  VertexId root = kNoVertex;  // flowers only
  /// Left-hand side minus right-hand side of the defining inequality.
  Rational gain;
};

/// Splits a walk at its first repeated vertex, recursively, into simple
/// paths and closed pieces (even alternating cycles and blossoms).
std::vector<AlternatingWalk> split_walk(const AlternatingWalk& walk);

/// An augmenting structure contained in an augmenting walk, or nullopt if
/// the walk is not augmenting.
std::optional<WalkStructure> extract_structure(const WeightedGraph& g, const Matching& m,
                                               const AlternatingWalk& walk);

}  // namespace graphstab

#pragma once

#include <optional>
#include <vector>

#include "graphstab/graph.hpp"
#include "graphstab/walk_dp.hpp"

namespace graphstab {

struct MStabilizerOptions {
  /// Scan exposed vertices from the highest index down instead of up.
  bool descending = false;
};

struct MStabilizerResult {
  enum class Status { Feasible, Infeasible };
  struct Removal {
    VertexId vertex;
    bool second_loop;  // removed as an endpoint pair in the second loop
    /// The walk that justified the removal.
    AlternatingWalk walk;
    bool flower;  // first loop: uu-walk rather than a walk to a covered vertex
  };

  Status status = Status::Feasible;
  std::vector<VertexId> S;   // sorted; S1 ∪ S2
  std::vector<VertexId> S1;  // sorted
  std::vector<VertexId> S2;  // sorted
  std::vector<Removal> removals;
  /// Residual weight bound of the final check: ν_f(G \ S).
  Rational residual_nu_f;
};

/// Vertex set S of M-exposed vertices such that M is a maximum-weight
/// matching of G \ S and G \ S is stable, or Infeasible. At most twice the
/// optimum, and optimal when the second loop removes nothing.
/// Errors: MNotAMatching.
MStabilizerResult m_vertex_stabilizer(const WeightedGraph& g, const Matching& m,
                                      const MStabilizerOptions& options = {});

}  // namespace graphstab

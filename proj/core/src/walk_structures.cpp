#include <algorithm>

#include "graphstab/walk_dp.hpp"

namespace graphstab {

namespace {

bool is_closed(const AlternatingWalk& w) { return w.length() > 0 && w.front() == w.back(); }

Rational signed_weight(const WeightedGraph& g, const Matching& m, const AlternatingWalk& w) {
  Rational total;
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    VertexId a = w.vertices[i];
    VertexId b = w.vertices[i + 1];
    const Rational& weight = g.edge(*g.find_edge(a, b)).weight;
    total += m.contains(a, b) ? -weight : weight;
  }
  return total;
}

AlternatingWalk reversed(AlternatingWalk w) {
  std::reverse(w.vertices.begin(), w.vertices.end());
  return w;
}

AlternatingWalk join(const std::vector<AlternatingWalk>& pieces) {
  AlternatingWalk out;
  for (const AlternatingWalk& p : pieces) {
    auto first = p.vertices.begin();
    if (!out.vertices.empty()) ++first;
    out.vertices.insert(out.vertices.end(), first, p.vertices.end());
  }
  return out;
}

}  // namespace

std::vector<AlternatingWalk> split_walk(const AlternatingWalk& walk) {
  std::vector<AlternatingWalk> pieces;
  std::vector<VertexId> rest = walk.vertices;
  while (!rest.empty()) {
    std::size_t i = 0, j = 0;
    for (std::size_t b = 1; b < rest.size() && j == 0; ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        if (rest[a] == rest[b]) {
          i = a;
          j = b;
          break;
        }
      }
    }
    if (j == 0) {
      if (rest.size() > 1 || pieces.empty()) pieces.push_back(AlternatingWalk{rest});
      break;
    }
    if (i > 0) pieces.push_back(AlternatingWalk{{rest.begin(), rest.begin() + i + 1}});
    pieces.push_back(AlternatingWalk{{rest.begin() + i, rest.begin() + j + 1}});
    if (j + 1 == rest.size()) break;
    rest.erase(rest.begin(), rest.begin() + j);
  }
  return pieces;
}

std::optional<WalkStructure> extract_structure(const WeightedGraph& g, const Matching& m,
                                               const AlternatingWalk& walk) {
  if (walk.length() == 0 || signed_weight(g, m, walk) <= 0) return std::nullopt;

  // Drop non-augmenting even cycles until only paths and blossoms remain.
  std::vector<AlternatingWalk> pieces = split_walk(walk);
  while (true) {
    bool dropped = false;
    std::vector<AlternatingWalk> kept;
    for (const AlternatingWalk& p : pieces) {
      if (is_closed(p) && p.length() % 2 == 0) {
        Rational gain = signed_weight(g, m, p);
        if (gain > 0) return WalkStructure{WalkStructure::Kind::AugmentingCycle, {p}, kNoVertex, gain};
        dropped = true;
      } else {
        kept.push_back(p);
      }
    }
    if (!dropped) break;
    if (kept.empty()) return std::nullopt;
    pieces = split_walk(join(kept));
  }

  const std::size_t l = pieces.size();
  if (l == 1) {
    const AlternatingWalk& only = pieces.front();
    Rational gain = signed_weight(g, m, only);
    if (is_closed(only)) {
      // A lone augmenting blossom is a flower whose stem is its base.
      return WalkStructure{WalkStructure::Kind::Flower, {only, AlternatingWalk{{only.front()}}},
                           only.front(), gain};
    }
    return WalkStructure{WalkStructure::Kind::AugmentingPath, {only}, kNoVertex, gain};
  }

  auto weight = [&](const AlternatingWalk& p) { return signed_weight(g, m, p); };
  if (l >= 2 && is_closed(pieces[1]) && !is_closed(pieces[0])) {
    Rational gain = 2 * weight(pieces[0]) + weight(pieces[1]);
    if (gain > 0) {
      return WalkStructure{WalkStructure::Kind::Flower, {pieces[1], reversed(pieces[0])},
                           walk.front(), gain};
    }
  }
  if (l >= 2 && is_closed(pieces[l - 2]) && !is_closed(pieces[l - 1])) {
    Rational gain = weight(pieces[l - 2]) + 2 * weight(pieces[l - 1]);
    if (gain > 0) {
      return WalkStructure{WalkStructure::Kind::Flower, {pieces[l - 2], pieces[l - 1]},
                           walk.back(), gain};
    }
  }
  for (std::size_t b = 1; b + 2 < l; ++b) {
    if (!is_closed(pieces[b]) || is_closed(pieces[b + 1]) || !is_closed(pieces[b + 2])) continue;
    Rational gain = weight(pieces[b]) + 2 * weight(pieces[b + 1]) + weight(pieces[b + 2]);
    if (gain > 0) {
      return WalkStructure{WalkStructure::Kind::BiCycle,
                           {pieces[b], pieces[b + 1], pieces[b + 2]}, kNoVertex, gain};
    }
  }
  return std::nullopt;
}

}  // namespace graphstab

#pragma once

#include <string>
#include <vector>

#include "lapcoef/tree.hpp"

namespace lapcoef {

enum class TransformKind { Delta, PathShift, TwoEdgeShift, PendantSlide };

std::string to_string(TransformKind kind);

/// One coefficient-monotone edit and the trees on either side of it.
struct TransformStep {
  TransformKind kind = TransformKind::Delta;
  std::vector<Vertex> site;
  Tree before;
  Tree after;
};

/// A path hanging off an attachment vertex: vertices[0] is adjacent to the
/// attachment vertex, vertices.back() is a leaf, and every inner vertex has
/// degree two.
struct PendantPath {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  Vertex start() const { return vertices.front(); }
};

/// The path starting at neighbor `start` of `attach`, if that branch is a
/// pendant path.
std::optional<PendantPath> pendant_path(const Tree& t, Vertex attach, Vertex start);

/// All pendant paths attached at w, ordered by start vertex.
std::vector<PendantPath> pendant_paths(const Tree& t, Vertex w);

/// Delta transform at v towards neighbor w: every other neighbor of v must
/// start a pendant path (at least two of them); all of those paths except
/// the longest (lowest start label on ties) are re-attached to w.
Tree delta_transform(const Tree& t, Vertex v, Vertex w);

/// As above with w chosen as the unique neighbor of v not starting a pendant
/// path; when every neighbor does, w is the start of the longest one.
Tree delta_transform(const Tree& t, Vertex v);

/// G(p, q) -> G(p + 1, q - 1): the leaf of the path starting at q_start moves
/// to the end of the path starting at p_start. Requires p >= q >= 1.
Tree path_shift(const Tree& t, Vertex w, Vertex p_start, Vertex q_start);

/// Uses the longest and the shortest pendant paths at w.
Tree path_shift(const Tree& t, Vertex w);

/// G(p, q) -> G(p + 2, q - 2). Requires p >= q >= 2.
Tree two_edge_shift(const Tree& t, Vertex w, Vertex p_start, Vertex q_start);

/// Uses the longest pendant path and the shortest one of length >= 2.
Tree two_edge_shift(const Tree& t, Vertex w);

/// Re-attaches `leaf` to `to`, which must be adjacent to the leaf's neighbor.
Tree pendant_slide(const Tree& t, Vertex leaf, Vertex to);

}  // namespace lapcoef

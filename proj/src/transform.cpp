#include "lapcoef/transform.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "lapcoef/error.hpp"

namespace lapcoef {

namespace {

Tree rewire(const Tree& t, const std::vector<Edge>& remove, const std::vector<Edge>& add) {
  std::vector<Edge> edges;
  for (const auto& e : t.edges()) {
    bool drop = std::any_of(remove.begin(), remove.end(), [&](const Edge& r) {
      return (r.u == e.u && r.v == e.v) || (r.u == e.v && r.v == e.u);
    });
    if (!drop) edges.push_back(e);
  }
  edges.insert(edges.end(), add.begin(), add.end());
  return Tree(t.order(), std::move(edges));
}

void require_vertex(const Tree& t, Vertex v) {
  if (v < 0 || v >= t.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

PendantPath require_path(const Tree& t, Vertex w, Vertex start) {
  require_vertex(t, start);
  if (!t.adjacent(w, start)) {
    throw PreconditionError("vertex " + std::to_string(start) + " is not adjacent to " + std::to_string(w));
  }
  auto path = pendant_path(t, w, start);
  if (!path) {
    throw PreconditionError("no pendant path at " + std::to_string(w) + " through " + std::to_string(start));
  }
  return *path;
}

// Moves the last `count` vertices of q onto the end of p.
Tree shift_tail(const Tree& t, Vertex w, const PendantPath& p, const PendantPath& q, int count) {
  const auto q_len = static_cast<std::size_t>(q.length());
  const Vertex first_moved = q.vertices[q_len - static_cast<std::size_t>(count)];
  const Vertex detach_from = q_len > static_cast<std::size_t>(count) ? q.vertices[q_len - static_cast<std::size_t>(count) - 1] : w;
  return rewire(t, {{detach_from, first_moved}}, {{p.vertices.back(), first_moved}});
}

std::pair<PendantPath, PendantPath> choose_shift_pair(const Tree& t, Vertex w, int min_q) {
  require_vertex(t, w);
  auto paths = pendant_paths(t, w);
  // longest path, lowest start on ties
  auto p_it = std::max_element(paths.begin(), paths.end(),
                               [](const PendantPath& a, const PendantPath& b) { return a.length() < b.length(); });
  if (p_it == paths.end()) throw PreconditionError("vertex " + std::to_string(w) + " carries no pendant path");
  std::optional<PendantPath> q;
  for (auto it = paths.begin(); it != paths.end(); ++it) {
    if (it == p_it || it->length() < min_q) continue;
    if (!q || it->length() < q->length()) q = *it;
  }
  if (!q) {
    throw PreconditionError("vertex " + std::to_string(w) + " needs two pendant paths (second of length >= " +
                            std::to_string(min_q) + ")");
  }
  return {*p_it, *q};
}

}  // namespace

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::Delta: return "delta";
    case TransformKind::PathShift: return "path_shift";
    case TransformKind::TwoEdgeShift: return "two_edge_shift";
    case TransformKind::PendantSlide: return "pendant_slide";
  }
  return "unknown";
}

std::optional<PendantPath> pendant_path(const Tree& t, Vertex attach, Vertex start) {
  PendantPath path;
  Vertex prev = attach, cur = start;
  path.vertices.push_back(cur);
  while (t.degree(cur) == 2) {
    auto nb = t.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    path.vertices.push_back(cur);
  }
  if (t.degree(cur) != 1) return std::nullopt;
  return path;
}

std::vector<PendantPath> pendant_paths(const Tree& t, Vertex w) {
  std::vector<PendantPath> out;
  if (t.order() < 2) return out;
  for (Vertex x : t.neighbors(w)) {
    // with w a leaf its only branch is the rest of the tree, never pendant
    if (t.degree(w) == 1 && t.order() > 2) break;
    if (auto p = pendant_path(t, w, x)) out.push_back(std::move(*p));
  }
  return out;
}

Tree delta_transform(const Tree& t, Vertex v, Vertex w) {
  require_vertex(t, v);
  require_vertex(t, w);
  if (t.degree(v) < 3) throw PreconditionError("delta transform needs a vertex of degree >= 3");
  if (!t.adjacent(v, w)) throw PreconditionError("w must be a neighbor of v");
  std::vector<PendantPath> paths;
  for (Vertex x : t.neighbors(v)) {
    if (x == w) continue;
    auto p = pendant_path(t, v, x);
    if (!p) throw PreconditionError("neighbor " + std::to_string(x) + " of v does not start a pendant path");
    paths.push_back(std::move(*p));
  }
  auto keep = std::max_element(paths.begin(), paths.end(),
                               [](const PendantPath& a, const PendantPath& b) { return a.length() < b.length(); });
  std::vector<Edge> remove, add;
  for (auto it = paths.begin(); it != paths.end(); ++it) {
    if (it == keep) continue;
    remove.push_back({v, it->start()});
    add.push_back({w, it->start()});
  }
  return rewire(t, remove, add);
}

Tree delta_transform(const Tree& t, Vertex v) {
  require_vertex(t, v);
  if (t.degree(v) < 3) throw PreconditionError("delta transform needs a vertex of degree >= 3");
  std::optional<Vertex> w;
  std::optional<PendantPath> longest;
  for (Vertex x : t.neighbors(v)) {
    auto p = pendant_path(t, v, x);
    if (!p) {
      if (w) throw PreconditionError("v has more than one neighbor outside its pendant paths");
      w = x;
    } else if (!longest || p->length() > longest->length()) {
      longest = std::move(p);
    }
  }
  return delta_transform(t, v, w ? *w : longest->start());
}

Tree path_shift(const Tree& t, Vertex w, Vertex p_start, Vertex q_start) {
  require_vertex(t, w);
  if (p_start == q_start) throw PreconditionError("the two pendant paths must differ");
  auto p = require_path(t, w, p_start);
  auto q = require_path(t, w, q_start);
  if (p.length() < q.length()) throw PreconditionError("path shift needs p >= q");
  return shift_tail(t, w, p, q, 1);
}

Tree path_shift(const Tree& t, Vertex w) {
  auto [p, q] = choose_shift_pair(t, w, 1);
  return shift_tail(t, w, p, q, 1);
}

Tree two_edge_shift(const Tree& t, Vertex w, Vertex p_start, Vertex q_start) {
  require_vertex(t, w);
  if (p_start == q_start) throw PreconditionError("the two pendant paths must differ");
  auto p = require_path(t, w, p_start);
  auto q = require_path(t, w, q_start);
  if (q.length() < 2) throw PreconditionError("two-edge shift needs q >= 2");
  if (p.length() < q.length()) throw PreconditionError("two-edge shift needs p >= q");
  return shift_tail(t, w, p, q, 2);
}

Tree two_edge_shift(const Tree& t, Vertex w) {
  auto [p, q] = choose_shift_pair(t, w, 2);
  return shift_tail(t, w, p, q, 2);
}

Tree pendant_slide(const Tree& t, Vertex leaf, Vertex to) {
  require_vertex(t, leaf);
  require_vertex(t, to);
  if (t.degree(leaf) != 1) throw PreconditionError("pendant slide needs a leaf");
  const Vertex anchor = t.neighbors(leaf)[0];
  if (to == leaf || !t.adjacent(anchor, to)) {
    throw PreconditionError("target must be adjacent to the leaf's neighbor");
  }
  return rewire(t, {{anchor, leaf}}, {{to, leaf}});
}

}  // namespace lapcoef

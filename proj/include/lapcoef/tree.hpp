#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lapcoef {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple tree on vertices 0..n-1.
///
/// Construction validates the edge list (n-1 edges, no loops, no duplicates,
/// connected); a constructed Tree is immutable.
class Tree {
 public:
  /// Single vertex.
  Tree();

  /// Throws InvalidTree when the edges do not form a tree on n vertices.
  Tree(int n, std::vector<Edge> edges);

  /// parent[0] is ignored; every other vertex v is joined to parent[v] < v.
  static Tree from_parents(std::span<const int> parent);

  int order() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const Tree& a, const Tree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  struct Unchecked {};
  Tree(Unchecked, int n, std::vector<Edge> edges);
  void build_adjacency();

  int n_ = 1;
  std::vector<Edge> edges_;  // normalized u < v, sorted
  std::vector<std::vector<Vertex>> adj_;
};

/// BFS distances from a source vertex.
std::vector<int> distances_from(const Tree& t, Vertex source);

/// Length (in edges) of a longest path.
int diameter(const Tree& t);

/// Vertices of a longest path, from one end to the other.
std::vector<Vertex> longest_path(const Tree& t);

/// The one or two central vertices (middle of any longest path), ascending.
std::vector<Vertex> center(const Tree& t);

/// The one or two centroid vertices, ascending.
std::vector<Vertex> centroid(const Tree& t);

int max_degree(const Tree& t);

/// Sum of distances over unordered vertex pairs.
long long wiener(const Tree& t);

/// First Zagreb index: sum of squared degrees.
long long zagreb(const Tree& t);

/// Every edge replaced by a path of length two. Original vertices keep their
/// labels; the vertex inserted on the i-th (sorted) edge is n + i.
Tree subdivision(const Tree& t);

/// The perfect matching of t, if one exists (it is unique in a tree).
/// Found by repeatedly matching a leaf with its neighbor and deleting both.
std::optional<std::vector<Edge>> perfect_matching(const Tree& t);

inline bool has_perfect_matching(const Tree& t) { return perfect_matching(t).has_value(); }

}  // namespace lapcoef

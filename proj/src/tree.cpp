#include "lapcoef/tree.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "lapcoef/error.hpp"

namespace lapcoef {

namespace {

Edge normalized(Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; }

}  // namespace

Tree::Tree() : n_(1), adj_(1) {}

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InvalidTree("a tree needs at least one vertex");
  if (edges_.size() != static_cast<std::size_t>(n - 1)) {
    throw InvalidTree("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  for (auto& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidTree("edge endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw InvalidTree("self-loop at vertex " + std::to_string(e.u));
    e = normalized(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw InvalidTree("duplicate edge");
  build_adjacency();

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw InvalidTree("edges do not connect all vertices");
}

Tree::Tree(Unchecked, int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) e = normalized(e);
  std::sort(edges_.begin(), edges_.end());
  build_adjacency();
}

Tree Tree::from_parents(std::span<const int> parent) {
  if (parent.empty()) throw InvalidTree("a tree needs at least one vertex");
  const int n = static_cast<int>(parent.size());
  std::vector<Edge> edges;
  edges.reserve(parent.size() - 1);
  for (int v = 1; v < n; ++v) {
    int p = parent[static_cast<std::size_t>(v)];
    if (p < 0 || p >= v) throw InvalidTree("parent of vertex " + std::to_string(v) + " must precede it");
    edges.push_back({p, v});
  }
  return Tree(Unchecked{}, n, std::move(edges));
}

void Tree::build_adjacency() {
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Tree::adjacent(Vertex a, Vertex b) const {
  const auto& nb = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<int> distances_from(const Tree& t, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(t.order()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : t.neighbors(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

Vertex farthest(const std::vector<int>& dist) {
  return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

}  // namespace

std::vector<Vertex> longest_path(const Tree& t) {
  Vertex a = farthest(distances_from(t, 0));
  auto from_a = distances_from(t, a);
  Vertex b = farthest(from_a);
  // walk back from b toward a along decreasing distance
  std::vector<Vertex> path{b};
  Vertex cur = b;
  while (cur != a) {
    for (Vertex w : t.neighbors(cur)) {
      if (from_a[static_cast<std::size_t>(w)] == from_a[static_cast<std::size_t>(cur)] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int diameter(const Tree& t) {
  Vertex a = farthest(distances_from(t, 0));
  auto d = distances_from(t, a);
  return *std::max_element(d.begin(), d.end());
}

std::vector<Vertex> center(const Tree& t) {
  auto path = longest_path(t);
  const std::size_t len = path.size() - 1;
  std::vector<Vertex> c{path[len / 2]};
  if (len % 2 == 1) c.push_back(path[len / 2 + 1]);
  std::sort(c.begin(), c.end());
  return c;
}

std::vector<Vertex> centroid(const Tree& t) {
  const int n = t.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1), order;
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    for (Vertex w : t.neighbors(v)) {
      if (w != parent[static_cast<std::size_t>(v)]) {
        parent[static_cast<std::size_t>(w)] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<int> size(static_cast<std::size_t>(n), 1), heaviest(static_cast<std::size_t>(n), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    int p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(v)];
      heaviest[static_cast<std::size_t>(p)] = std::max(heaviest[static_cast<std::size_t>(p)], size[static_cast<std::size_t>(v)]);
    }
  }
  std::vector<Vertex> result;
  for (Vertex v = 0; v < n; ++v) {
    int worst = std::max(heaviest[static_cast<std::size_t>(v)], n - size[static_cast<std::size_t>(v)]);
    if (2 * worst <= n) result.push_back(v);
  }
  return result;
}

int max_degree(const Tree& t) {
  int best = 0;
  for (Vertex v = 0; v < t.order(); ++v) best = std::max(best, t.degree(v));
  return best;
}

long long wiener(const Tree& t) {
  // Each edge separates s and n - s vertices and lies on s * (n - s) paths.
  const int n = t.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1), order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex v = order[i];
    for (Vertex w : t.neighbors(v)) {
      if (w != parent[static_cast<std::size_t>(v)]) {
        parent[static_cast<std::size_t>(w)] = v;
        order.push_back(w);
      }
    }
  }
  std::vector<long long> size(static_cast<std::size_t>(n), 1);
  long long total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    int p = parent[static_cast<std::size_t>(v)];
    if (p < 0) continue;
    total += size[static_cast<std::size_t>(v)] * (n - size[static_cast<std::size_t>(v)]);
    size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(v)];
  }
  return total;
}

long long zagreb(const Tree& t) {
  long long z = 0;
  for (Vertex v = 0; v < t.order(); ++v) z += static_cast<long long>(t.degree(v)) * t.degree(v);
  return z;
}

Tree subdivision(const Tree& t) {
  const int n = t.order();
  std::vector<Edge> edges;
  edges.reserve(2 * t.edges().size());
  int next = n;
  for (const auto& e : t.edges()) {
    edges.push_back({e.u, next});
    edges.push_back({e.v, next});
    ++next;
  }
  return Tree(next, std::move(edges));
}

std::optional<std::vector<Edge>> perfect_matching(const Tree& t) {
  const int n = t.order();
  if (n % 2 != 0) return std::nullopt;
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] == 1) leaves.push_back(v);
  }
  std::vector<Edge> matching;
  while (!leaves.empty()) {
    Vertex leaf = leaves.back();
    leaves.pop_back();
    if (removed[static_cast<std::size_t>(leaf)]) continue;
    Vertex mate = -1;
    for (Vertex w : t.neighbors(leaf)) {
      if (!removed[static_cast<std::size_t>(w)]) {
        mate = w;
        break;
      }
    }
    if (mate < 0) return std::nullopt;  // isolated after deletions
    removed[static_cast<std::size_t>(leaf)] = removed[static_cast<std::size_t>(mate)] = 1;
    matching.push_back(leaf < mate ? Edge{leaf, mate} : Edge{mate, leaf});
    for (Vertex w : t.neighbors(mate)) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      if (--deg[static_cast<std::size_t>(w)] <= 1) leaves.push_back(w);
    }
  }
  if (2 * matching.size() != static_cast<std::size_t>(n)) return std::nullopt;
  std::sort(matching.begin(), matching.end());
  return matching;
}

}  // namespace lapcoef

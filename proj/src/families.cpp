#include "lapcoef/families.hpp"

#include <algorithm>
#include <string>

#include "lapcoef/error.hpp"

namespace lapcoef {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

Tree make_caterpillar(const std::vector<int>& pendants) {
  const int d = static_cast<int>(pendants.size()) + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < d; ++i) edges.push_back({i, i + 1});
  int next = d + 1;
  for (int i = 0; i + 1 < d; ++i) {
    if (pendants[static_cast<std::size_t>(i)] < 0) throw DomainError("caterpillar pendant counts must be non-negative");
    for (int j = 0; j < pendants[static_cast<std::size_t>(i)]; ++j) edges.push_back({i + 1, next++});
  }
  return Tree(next, std::move(edges));
}

Tree make_starlike(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : legs) {
    if (len < 1) throw DomainError("starlike legs must have length >= 1");
    Vertex prev = 0;
    for (int j = 0; j < len; ++j) {
      edges.push_back({prev, next});
      prev = next++;
    }
  }
  return Tree(next, std::move(edges));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

std::vector<int> balanced_legs(int n, int legs) {
  require(legs >= 1 && legs <= n - 1, "balanced starlike needs 1 <= legs <= n - 1");
  const int total = n - 1;
  std::vector<int> out(static_cast<std::size_t>(legs), total / legs);
  for (int i = 0; i < total % legs; ++i) ++out[static_cast<std::size_t>(i)];
  return out;
}

std::vector<int> pm_tree_legs(int n, int max_degree) {
  require(n % 2 == 0, "A(n, max_degree) needs even n");
  require(max_degree >= 2 && 2 * max_degree <= n, "A(n, max_degree) needs 2 <= max_degree <= n/2");
  std::vector<int> legs{n - 2 * max_degree + 2};
  legs.insert(legs.end(), static_cast<std::size_t>(max_degree - 2), 2);
  legs.push_back(1);
  return legs;
}

Tree build_family(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Path& p) {
            require(p.n >= 1, "path needs n >= 1");
            if (p.n == 1) return Tree();
            return make_caterpillar(std::vector<int>(static_cast<std::size_t>(p.n - 2), 0));
          },
          [](const family::Star& s) {
            require(s.n >= 1, "star needs n >= 1");
            std::vector<Edge> edges;
            for (int v = 1; v < s.n; ++v) edges.push_back({0, v});
            return Tree(s.n, std::move(edges));
          },
          [](const family::Caterpillar& c) { return make_caterpillar(c.pendants); },
          [](const family::CatNd& c) {
            require(c.n >= 3 && c.d >= 2 && c.d <= c.n - 1, "C(n, d) needs 2 <= d <= n - 1");
            std::vector<int> pendants(static_cast<std::size_t>(c.d - 1), 0);
            pendants[static_cast<std::size_t>(c.d / 2 - 1)] = c.n - c.d - 1;
            return make_caterpillar(pendants);
          },
          [](const family::Broom& b) {
            require(b.n >= 3 && b.max_degree >= 2 && b.max_degree <= b.n - 1, "broom needs 2 <= max_degree <= n - 1");
            const int d = b.n - b.max_degree + 1;
            std::vector<int> pendants(static_cast<std::size_t>(d - 1), 0);
            pendants[0] = b.max_degree - 2;
            return make_caterpillar(pendants);
          },
          [](const family::Starlike& s) {
            require(!s.legs.empty(), "starlike needs at least one leg");
            return make_starlike(s.legs);
          },
          [](const family::BalancedStarlike& b) { return make_starlike(balanced_legs(b.n, b.legs)); },
          [](const family::PMTree& a) { return make_starlike(pm_tree_legs(a.n, a.max_degree)); },
      },
      spec);
}

}  // namespace lapcoef

#include "lapcoef/canonical.hpp"

#include <algorithm>
#include <vector>

namespace lapcoef {

std::string rooted_code(const Tree& t, Vertex root) {
  const int n = t.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order{root};
  parent[static_cast<std::size_t>(root)] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(static_cast<std::size_t>(n));
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[static_cast<std::size_t>(*it)];
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (auto& k : kids) code += k;
    code += ')';
    kids.clear();
    kids.shrink_to_fit();
    if (*it == root) {
      result = std::move(code);
    } else {
      child_codes[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])].push_back(std::move(code));
    }
  }
  return result;
}

CanonicalCode canonical_code(const Tree& t) {
  auto roots = centroid(t);
  std::string best = rooted_code(t, roots.front());
  for (std::size_t i = 1; i < roots.size(); ++i) best = std::min(best, rooted_code(t, roots[i]));
  return CanonicalCode{std::move(best)};
}

}  // namespace lapcoef

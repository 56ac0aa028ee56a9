#include <algorithm>

#include "lapcoef/analysis.hpp"
#include "lapcoef/error.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/order.hpp"

namespace lapcoef {

std::size_t chain_slide_count(int n) {
  std::size_t total = 0;
  for (int d = 2; d <= n - 2; ++d) total += static_cast<std::size_t>(d / 2);
  return total;
}

DominationChain build_chain(int n) {
  if (n < 3) throw DomainError("the star-to-path chain needs n >= 3");
  DominationChain chain;
  chain.n = n;
  Tree current = caterpillar_nd(n, 2);
  std::vector<Vertex> spine{0, 1, 2};
  chain.trees.push_back(current);

  for (int d = 2; d <= n - 2; ++d) {
    const auto center_index = static_cast<std::size_t>(d / 2);
    const Vertex hub = spine[center_index];
    // the highest-labeled pendant at the hub travels
    Vertex mover = -1;
    for (Vertex x : current.neighbors(hub)) {
      if (current.degree(x) == 1 && std::find(spine.begin(), spine.end(), x) == spine.end()) mover = std::max(mover, x);
    }
    if (mover < 0) throw std::logic_error("chain construction lost its pendant vertices");
    for (std::size_t i = center_index; i >= 1; --i) {
      Tree next = pendant_slide(current, mover, spine[i - 1]);
      chain.steps.push_back({TransformKind::PendantSlide, {mover, spine[i], spine[i - 1]}, current, next});
      chain.trees.push_back(next);
      current = std::move(next);
    }
    spine.insert(spine.begin(), mover);
    // keep the remaining pendants on the central spine vertex of C(n, d + 1)
    const auto hub_index = static_cast<std::size_t>(std::find(spine.begin(), spine.end(), hub) - spine.begin());
    if (hub_index != static_cast<std::size_t>((d + 1) / 2)) std::reverse(spine.begin(), spine.end());
  }
  return chain;
}

ChainCheck check_chain(const DominationChain& chain) {
  ChainCheck out;
  if (chain.trees.empty()) return out;
  out.starts_at_star = is_isomorphic(chain.trees.front(), star_tree(chain.n));
  out.ends_at_path = is_isomorphic(chain.trees.back(), path_tree(chain.n));
  out.strictly_increasing = true;
  CoeffVector prev = coeffs(chain.trees.front());
  for (std::size_t i = 1; i < chain.trees.size(); ++i) {
    CoeffVector cur = coeffs(chain.trees[i]);
    if (!classify(prev, cur).first_dominated()) {
      out.strictly_increasing = false;
      out.first_bad_step = i - 1;
      break;
    }
    prev = std::move(cur);
  }
  return out;
}

}  // namespace lapcoef

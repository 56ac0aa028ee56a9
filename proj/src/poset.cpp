#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "lapcoef/error.hpp"
#include "lapcoef/order.hpp"

namespace lapcoef {

namespace {

bool leq(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

// Hopcroft-Karp on a bipartite graph with `size` vertices per side.
std::size_t maximum_matching(const std::vector<std::vector<int>>& adj) {
  const int size = static_cast<int>(adj.size());
  constexpr int kFree = -1;
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_left(static_cast<std::size_t>(size), kFree), match_right(static_cast<std::size_t>(size), kFree);
  std::vector<int> dist(static_cast<std::size_t>(size));
  std::size_t matched = 0;

  auto bfs = [&] {
    std::queue<int> q;
    bool reachable_free = false;
    for (int u = 0; u < size; ++u) {
      if (match_left[static_cast<std::size_t>(u)] == kFree) {
        dist[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      } else {
        dist[static_cast<std::size_t>(u)] = kInf;
      }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        int next = match_right[static_cast<std::size_t>(v)];
        if (next == kFree) {
          reachable_free = true;
        } else if (dist[static_cast<std::size_t>(next)] == kInf) {
          dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(next);
        }
      }
    }
    return reachable_free;
  };

  std::vector<std::size_t> cursor(static_cast<std::size_t>(size));
  // iterative DFS along the BFS layering
  auto augment = [&](int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      auto& it = cursor[static_cast<std::size_t>(u)];
      const auto& nbrs = adj[static_cast<std::size_t>(u)];
      bool advanced = false;
      while (it < nbrs.size()) {
        int v = nbrs[it];
        int next = match_right[static_cast<std::size_t>(v)];
        if (next == kFree) {
          // Flip the alternating path on the stack; every entry above the
          // root was reached through the right vertex it is matched to.
          int right_vertex = v;
          for (std::size_t i = stack.size(); i-- > 0;) {
            int left = stack[i];
            int previous_right = match_left[static_cast<std::size_t>(left)];
            match_left[static_cast<std::size_t>(left)] = right_vertex;
            match_right[static_cast<std::size_t>(right_vertex)] = left;
            right_vertex = previous_right;
          }
          return true;
        }
        if (dist[static_cast<std::size_t>(next)] == dist[static_cast<std::size_t>(u)] + 1) {
          stack.push_back(next);
          advanced = true;
          break;
        }
        ++it;
      }
      if (!advanced) {
        dist[static_cast<std::size_t>(u)] = kInf;
        stack.pop_back();
        if (!stack.empty()) ++cursor[static_cast<std::size_t>(stack.back())];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (int u = 0; u < size; ++u) {
      if (match_left[static_cast<std::size_t>(u)] == kFree && augment(u)) ++matched;
    }
  }
  return matched;
}

}  // namespace

PosetStats poset_stats_of(std::span<const std::vector<std::int64_t>> vectors) {
  std::vector<std::vector<std::int64_t>> distinct(vectors.begin(), vectors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // Strict domination raises the coefficient sum, so ascending sums give a
  // topological order.
  std::vector<std::int64_t> sums(distinct.size());
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    sums[i] = std::accumulate(distinct[i].begin(), distinct[i].end(), std::int64_t{0});
  }
  std::vector<std::size_t> order(distinct.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sums[a] < sums[b]; });

  const std::size_t m = distinct.size();
  std::vector<std::vector<int>> above(m);  // position i -> positions j dominating it
  std::vector<std::size_t> chain(m, 1);
  std::size_t longest = m ? 1 : 0;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sums[order[i]] < sums[order[j]] && leq(distinct[order[i]], distinct[order[j]])) {
        above[i].push_back(static_cast<int>(j));
        chain[j] = std::max(chain[j], chain[i] + 1);
      }
    }
    longest = std::max(longest, chain[j]);
  }

  PosetStats stats;
  stats.tree_count = vectors.size();
  stats.distinct_vectors = m;
  stats.longest_chain = longest;
  // Dilworth: the order is transitive, so a minimum chain cover has
  // m - (maximum matching in the split comparability graph) chains.
  stats.max_antichain = m - maximum_matching(above);
  return stats;
}

PosetStats poset_stats(int n, const SweepOptions& options) {
  if (n < 1) throw DomainError("poset statistics need n >= 1");
  check_sweep_guard(n, options);
  auto stats = poset_stats_of(coefficient_table(n, options.jobs));
  stats.n = n;
  return stats;
}

}  // namespace lapcoef

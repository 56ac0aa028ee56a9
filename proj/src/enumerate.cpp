#include "lapcoef/enumerate.hpp"

#include <algorithm>
#include <string>

#include "lapcoef/error.hpp"

namespace lapcoef {

namespace {

using Levels = std::vector<int>;

// Splits the sequence at the second child of the root: `left` is the first
// root subtree (levels shifted up by one), `rest` the root with the others.
void split(const Levels& layout, Levels& left, Levels& rest) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  left.clear();
  rest.assign(1, 0);
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// Next rooted tree in reverse lexicographic order, changing position p on.
bool next_rooted(Levels& seq, std::size_t p) {
  if (p == 0) return false;
  std::size_t q = p - 1;
  while (seq[q] != seq[p] - 1) --q;
  for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
  return true;
}

bool next_rooted(Levels& seq) {
  std::size_t p = seq.size() - 1;
  while (p > 0 && seq[p] == 1) --p;
  return next_rooted(seq, p);
}

// Accepts the candidate if it is rooted at its center (and, for bicentral
// trees, oriented canonically); otherwise jumps to the next candidate that is.
bool to_free_tree(Levels& candidate) {
  Levels left, rest;
  split(candidate, left, rest);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size()) {
      valid = false;
    } else if (left.size() == rest.size() && left > rest) {
      valid = false;
    }
  }
  if (valid) return true;

  const std::size_t p = left.size();
  const int at_p = candidate[p];
  if (!next_rooted(candidate, p)) return false;
  if (at_p > 2) {
    split(candidate, left, rest);
    const int new_left_height = *std::max_element(left.begin(), left.end());
    const std::size_t suffix = static_cast<std::size_t>(new_left_height + 1);
    for (std::size_t i = 0; i < suffix; ++i) {
      candidate[candidate.size() - suffix + i] = static_cast<int>(i + 1);
    }
  }
  return true;
}

Tree tree_from_levels(const Levels& levels) {
  std::vector<int> parent(levels.size(), -1);
  std::vector<int> last_at(levels.size() + 1, 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto level = static_cast<std::size_t>(levels[i]);
    if (i > 0) parent[i] = last_at[level - 1];
    last_at[level] = static_cast<int>(i);
  }
  return Tree::from_parents(parent);
}

}  // namespace

FreeTreeStream::FreeTreeStream(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw DomainError("tree enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
}

bool FreeTreeStream::advance() {
  if (!started_) {
    started_ = true;
    if (n_ <= 2) {
      current_.clear();
      for (int i = 0; i < n_; ++i) current_.push_back(i);
      return true;
    }
    // path rooted at its center
    for (int i = 0; i <= n_ / 2; ++i) current_.push_back(i);
    for (int i = 1; i < (n_ + 1) / 2; ++i) current_.push_back(i);
  } else {
    if (n_ <= 2 || !next_rooted(current_)) return false;
  }
  return to_free_tree(current_);
}

std::optional<Tree> FreeTreeStream::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return tree_from_levels(current_);
}

std::vector<Tree> all_trees(int n) {
  FreeTreeStream stream(n);
  std::vector<Tree> out;
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

std::optional<std::vector<int>> starlike_legs(const Tree& t) {
  const int n = t.order();
  if (n < 2) return std::nullopt;
  Vertex root = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) >= 3) {
      if (root >= 0) return std::nullopt;
      root = v;
    }
  }
  if (root < 0) {
    // a path: take an internal vertex as root when there is one
    if (n == 2) return std::vector<int>{1};
    for (Vertex v = 0; v < n; ++v) {
      if (t.degree(v) == 2) {
        root = v;
        break;
      }
    }
  }
  std::vector<int> legs;
  for (Vertex start : t.neighbors(root)) {
    int len = 1;
    Vertex prev = root, cur = start;
    while (t.degree(cur) == 2) {
      Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.rbegin(), legs.rend());
  return legs;
}

bool is_starlike_with_legs(const Tree& t, int legs) {
  if (legs < 1) return false;
  const int n = t.order();
  if (legs <= 2) return n >= legs + 1 && max_degree(t) <= 2;
  int branching = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) >= 3) {
      if (t.degree(v) != legs) return false;
      ++branching;
    }
  }
  return branching == 1;
}

bool TreeFilter::matches(const Tree& t) const {
  if (max_degree && lapcoef::max_degree(t) != *max_degree) return false;
  if (starlike_legs && !is_starlike_with_legs(t, *starlike_legs)) return false;
  if (diameter && lapcoef::diameter(t) != *diameter) return false;
  if (perfect_matching && !has_perfect_matching(t)) return false;
  return true;
}

std::vector<Tree> enumerate_filtered(int n, const TreeFilter& filter) {
  FreeTreeStream stream(n);
  std::vector<Tree> out;
  // No tree on an odd number of vertices has a perfect matching.
  if (filter.perfect_matching && n % 2 != 0) return out;
  if (filter.diameter && (*filter.diameter < 0 || *filter.diameter > n - 1)) return out;
  while (auto t = stream.next()) {
    if (filter.matches(*t)) out.push_back(std::move(*t));
  }
  return out;
}

}  // namespace lapcoef

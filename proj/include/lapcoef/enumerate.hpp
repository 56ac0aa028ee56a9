#pragma once

#include <optional>
#include <vector>

#include "lapcoef/tree.hpp"

namespace lapcoef {

/// Largest order accepted by the enumerators.
inline constexpr int kMaxEnumerationOrder = 64;

/// Streams one representative of every isomorphism class of free trees on n
/// vertices, in a fixed order, using canonical level sequences (successor
/// rule of Wright, Richmond, Odlyzko and McKay). The first tree is the path,
/// the last is the star. Vertex v of an emitted tree is the v-th vertex of
/// the level sequence in preorder; vertex 0 is the root.
class FreeTreeStream {
 public:
  /// Throws DomainError unless 1 <= n <= kMaxEnumerationOrder.
  explicit FreeTreeStream(int n);

  std::optional<Tree> next();

  /// Level sequence of the tree most recently returned by next().
  const std::vector<int>& levels() const noexcept { return current_; }

 private:
  bool advance();

  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

std::vector<Tree> all_trees(int n);

/// Conjunction of structural predicates; unset fields accept everything.
struct TreeFilter {
  std::optional<int> diameter = std::nullopt;
  std::optional<int> max_degree = std::nullopt;
  std::optional<int> starlike_legs = std::nullopt;  // one root carrying exactly this many pendant paths
  bool perfect_matching = false;

  bool matches(const Tree& t) const;
};

/// True when t consists of `legs` pendant paths joined at one vertex.
bool is_starlike_with_legs(const Tree& t, int legs);

/// Leg lengths (longest first) of a starlike tree, or nullopt.
std::optional<std::vector<int>> starlike_legs(const Tree& t);

/// Exactly the classes of all_trees(n) accepted by the filter, same order.
std::vector<Tree> enumerate_filtered(int n, const TreeFilter& filter);

}  // namespace lapcoef

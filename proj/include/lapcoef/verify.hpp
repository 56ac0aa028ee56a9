#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lapcoef/transform.hpp"

namespace lapcoef {

enum class Theorem { Delta, PathShift, TwoEdgeShift, Majorization };

std::string to_string(Theorem theorem);
/// Accepts "delta", "path_shift", "two_edge_shift", "majorization".
std::optional<Theorem> parse_theorem(const std::string& name);

struct Violation {
  TransformStep step;  // for majorization: before = T(p), after = T(q)
  int index = -1;      // first k where the claimed inequality fails, -1 for structural failures
  std::string detail;
};

struct MonotonicityReport {
  Theorem theorem = Theorem::Delta;
  int max_n = 0;
  std::size_t trees_examined = 0;
  std::size_t instances = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Exhaustively applies every legal instance of the transformation to every
/// tree on at most max_n vertices and checks the claimed coefficientwise
/// inequality:
///   delta          c(after) <= c(before), v a branching vertex furthest from
///                  the center, w its neighbor towards the center;
///   path_shift     c(after) >= c(before) for every ordered pair p >= q >= 1;
///   two_edge_shift c(after) >= c(before) for p >= q >= 2 on trees with a
///                  perfect matching (even n), which the shift must keep;
///   majorization   c(T(p)) <= c(T(q)) whenever the sorted leg vector q
///                  majorizes p (prefix sums of q dominate, equal totals).
/// The report order is independent of `jobs`.
MonotonicityReport verify_monotonicity(Theorem theorem, int max_n, int jobs = 1);

/// Prefix-sum domination of descending vectors with equal totals.
bool majorizes(const std::vector<int>& q, const std::vector<int>& p);

/// All partitions of total into exactly parts positive summands, descending.
std::vector<std::vector<int>> partitions(int total, int parts);

}  // namespace lapcoef

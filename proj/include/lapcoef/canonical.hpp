#pragma once

#include <compare>
#include <string>

#include "lapcoef/tree.hpp"

namespace lapcoef {

/// Isomorphism-class key: the smallest parenthesis encoding of the tree
/// rooted at one of its centroids, children sorted by encoding.
struct CanonicalCode {
  std::string code;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Parenthesis encoding of t rooted at root, children in sorted order.
std::string rooted_code(const Tree& t, Vertex root);

CanonicalCode canonical_code(const Tree& t);

inline bool is_isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

}  // namespace lapcoef

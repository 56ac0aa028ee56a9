#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lapcoef/bigint.hpp"
#include "lapcoef/tree.hpp"

namespace lapcoef {

/// Laplacian coefficients c_0..c_n of an n-vertex tree, stored unsigned:
/// det(xI - L) = sum_k (-1)^k c_k x^(n-k).
struct CoeffVector {
  std::vector<BigInt> c;

  int order() const noexcept { return static_cast<int>(c.size()) - 1; }
  const BigInt& operator[](std::size_t k) const { return c[k]; }

  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

/// m[k] = number of k-edge matchings.
struct MatchingVector {
  std::vector<BigInt> m;

  friend bool operator==(const MatchingVector&, const MatchingVector&) = default;
};

/// Matching counts by a rooted DP over (root matched, root free) sequences.
/// The result has length floor(n/2) + 1.
MatchingVector matchings(const Tree& t);

/// c_k = m_k(S(t)): matchings of the subdivision graph.
CoeffVector coeffs_via_matchings(const Tree& t);

/// Same quantity computed from the Laplacian matrix: fraction-free
/// determinants of (xI - L) at x = 0..n and exact interpolation.
/// Throws std::logic_error if the alternating sign pattern is violated.
CoeffVector coeffs_via_charpoly(const Tree& t);

inline CoeffVector coeffs(const Tree& t) { return coeffs_via_matchings(t); }

/// Matching-based coefficients in 64-bit arithmetic; throws std::overflow_error
/// if any intermediate value leaves the int64 range.
std::vector<std::int64_t> coeffs_int64(const Tree& t);

/// Number of k-matchings of the path on n vertices, C(n - k, k).
BigInt path_matching_count(int n, int k);

/// "1,6,10,4,0"
std::string to_string(const CoeffVector& v);

/// Componentwise a <= b (equal orders required).
bool dominated_by(const CoeffVector& a, const CoeffVector& b);

}  // namespace lapcoef

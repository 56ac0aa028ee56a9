#include <array>
#include <cmath>

#include "lapcoef/analysis.hpp"
#include "lapcoef/error.hpp"
#include "lapcoef/families.hpp"

namespace lapcoef {

namespace {

// coefficient * C(2n - top - k, k - bottom)
struct BinomialTerm {
  int coefficient;
  int top;
  int bottom;
};

constexpr std::array<BinomialTerm, 9> kT1Terms{{
    {6, 9, 2}, {8, 9, 1}, {1, 9, 0},
    {11, 8, 3}, {21, 8, 2},
    {6, 7, 4}, {20, 7, 3},
    {1, 6, 5}, {5, 6, 4},
}};

constexpr std::array<BinomialTerm, 15> kT2Terms{{
    {1, 11, 2}, {2, 11, 1}, {1, 11, 0},
    {4, 10, 3}, {12, 10, 2}, {8, 10, 1},
    {6, 9, 4}, {24, 9, 3}, {22, 9, 2},
    {4, 8, 5}, {20, 8, 4}, {24, 8, 3},
    {1, 7, 6}, {6, 7, 5}, {9, 7, 4},
}};

template <std::size_t N>
BigInt evaluate(const std::array<BinomialTerm, N>& terms, int n, int k) {
  BigInt total = 0;
  for (const auto& term : terms) total += term.coefficient * binomial(2L * n - term.top - k, static_cast<long>(k) - term.bottom);
  return total;
}

}  // namespace

Tree diameter_gap_tree(DiameterGapTree which, int n) {
  if (n < 8) throw DomainError("the diameter n - 3 trees need n >= 8");
  const int d = n - 3;
  std::vector<Edge> edges;
  for (int i = 0; i < d; ++i) edges.push_back({i, i + 1});
  const Vertex a = d + 1, b = d + 2;
  switch (which) {
    case DiameterGapTree::T1:
      edges.push_back({2, a});
      edges.push_back({a, b});
      break;
    case DiameterGapTree::T2:
      edges.push_back({1, a});
      edges.push_back({d - 1, b});
      break;
    case DiameterGapTree::T3:
      edges.push_back({1, a});
      edges.push_back({1, b});
      break;
  }
  return Tree(n, std::move(edges));
}

BigInt closed_form_c(DiameterGapTree which, int n, int k) {
  if (n < 8) throw DomainError("the closed forms need n >= 8");
  if (k < 0 || k > n) throw DomainError("k must lie in 0..n");
  switch (which) {
    case DiameterGapTree::T1: return evaluate(kT1Terms, n, k);
    case DiameterGapTree::T2: return evaluate(kT2Terms, n, k);
    case DiameterGapTree::T3: break;
  }
  throw DomainError("no closed form is known for T3");
}

BigInt crossing_quartic(long n, long k) {
  const BigInt N = n, K = k;
  return -408 - 788 * K - 120 * K * K - 13 * K * K * K + 3 * K * K * K * K + 844 * N + 639 * K * N +
         81 * K * K * N - 4 * K * K * K * N - 466 * N * N - 186 * K * N * N - 6 * K * K * N * N +
         104 * N * N * N + 16 * K * N * N * N - 8 * N * N * N * N;
}

BigInt scaled_limit_quartic(const BigInt& num, unsigned shift) {
  // 2^(4s) P(a / 2^s) = 3a^4 - 4a^3 2^s - 6a^2 2^(2s) + 16a 2^(3s) - 8 2^(4s)
  BigInt one = 1;
  BigInt s1 = one << shift, s2 = one << (2 * shift), s3 = one << (3 * shift), s4 = one << (4 * shift);
  const BigInt a2 = num * num;
  return 3 * a2 * a2 - 4 * a2 * num * s1 - 6 * a2 * s2 + 16 * num * s3 - 8 * s4;
}

RootBracket limit_quartic_root(unsigned bits) {
  // P(0) = -8 < 0 and P(1) = 1 > 0; bisect on numerators over 2^bits.
  BigInt lo = 0, hi = BigInt(1) << bits;
  if (sgn(scaled_limit_quartic(lo, bits)) >= 0 || sgn(scaled_limit_quartic(hi, bits)) <= 0) {
    throw std::logic_error("root bracket lost");
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (sgn(scaled_limit_quartic(mid, bits)) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double scale = std::ldexp(1.0, -static_cast<int>(bits));
  return RootBracket{lo.get_d() * scale, hi.get_d() * scale};
}

CrossingResult crossing_analysis(int n) {
  if (n < 8) throw DomainError("crossing analysis needs n >= 8");
  CrossingResult out;
  out.n = n;
  out.x0 = limit_quartic_root().mid();
  for (int k = 0; k <= n; ++k) {
    out.signs.push_back(sgn(closed_form_c(DiameterGapTree::T2, n, k) - closed_form_c(DiameterGapTree::T1, n, k)));
  }
  for (int k = 2; k <= n - 2; ++k) {
    if (out.signs[static_cast<std::size_t>(k)] > 0) {
      out.k_star = k;
      break;
    }
  }
  if (out.k_star) {
    out.single_change = true;
    for (int k = 2; k <= n - 2; ++k) {
      const int s = out.signs[static_cast<std::size_t>(k)];
      if ((k < *out.k_star && s > 0) || (k >= *out.k_star && s <= 0)) out.single_change = false;
    }
  }
  return out;
}

std::vector<Tree> match_closed_form(DiameterGapTree which, int n) {
  CoeffVector expected;
  for (int k = 0; k <= n; ++k) expected.c.push_back(closed_form_c(which, n, k));
  std::vector<Tree> out;
  for (auto& t : enumerate_filtered(n, TreeFilter{.diameter = n - 3})) {
    if (coeffs(t) == expected) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace lapcoef

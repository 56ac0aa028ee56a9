#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lapcoef/bigint.hpp"
#include "lapcoef/canonical.hpp"
#include "lapcoef/coeffs.hpp"
#include "lapcoef/enumerate.hpp"
#include "lapcoef/transform.hpp"

namespace lapcoef {

// ---------------------------------------------------------------------------
// Star-to-path domination chain

struct DominationChain {
  int n = 0;
  std::vector<Tree> trees;
  std::vector<TransformStep> steps;  // steps[i] takes trees[i] to trees[i + 1]

  std::size_t length() const { return steps.size(); }
};

/// Starting from the star C(n, 2), repeatedly takes one pendant vertex at the
/// center of C(n, d) and slides it one spine vertex at a time to the end v_0,
/// which yields C(n, d + 1) after floor(d/2) slides; stops at the path.
/// Throws DomainError for n < 3.
DominationChain build_chain(int n);

/// Sum of floor(d/2) over d = 2..n-2: the number of slides build_chain makes.
std::size_t chain_slide_count(int n);

struct ChainCheck {
  bool starts_at_star = false;
  bool ends_at_path = false;
  bool strictly_increasing = false;  // every step strictly dominated
  std::optional<std::size_t> first_bad_step;
};

ChainCheck check_chain(const DominationChain& chain);

// ---------------------------------------------------------------------------
// Extremal sweeps

enum class ExtremeMode { Min, Max };

struct ExtremalResult {
  int n = 0;
  ExtremeMode mode = ExtremeMode::Min;
  std::vector<Tree> members;                    // the class, enumeration order
  std::vector<CoeffVector> coefficients;        // per member
  std::vector<std::vector<std::size_t>> winners;  // per k, members attaining the extreme c_k
  std::optional<std::size_t> simultaneous;      // first member extreme for every k

  bool empty() const { return members.empty(); }
};

ExtremalResult extremal_sweep(int n, const TreeFilter& cls, ExtremeMode mode, int jobs = 1);

// ---------------------------------------------------------------------------
// Diameter n - 3: the closed-form pair and the crossing of their coefficients

enum class DiameterGapTree { T1, T2, T3 };

/// Explicit shapes of the three diameter n - 3 candidates (n >= 8). The
/// spine is v_0..v_{n-3}, labeled 0..n-3; the two extra vertices follow.
///   T1: a pendant path of length two at v_2
///   T2: pendant vertices at v_1 and v_{n-4}
///   T3: two pendant vertices at v_1
/// T1 and T2 are the two maximal elements of the domination order on
/// diameter n - 3 trees; T3 is dominated by T2.
Tree diameter_gap_tree(DiameterGapTree which, int n);

/// Exact closed-form c_k for T1 or T2 (zero-outside-range binomials).
BigInt closed_form_c(DiameterGapTree which, int n, int k);

/// The sign-determining quartic P(n, k) of c_k(T2) - c_k(T1).
BigInt crossing_quartic(long n, long k);

/// P(x) = 3x^4 - 4x^3 - 6x^2 + 16x - 8 evaluated exactly at num / 2^shift,
/// scaled by 2^(4 shift).
BigInt scaled_limit_quartic(const BigInt& num, unsigned shift);

struct RootBracket {
  double lo = 0;
  double hi = 0;
  double mid() const { return (lo + hi) / 2; }
};

/// Positive real root of P(x) by bisection on dyadic rationals with exact
/// sign evaluation, to width 2^-bits.
RootBracket limit_quartic_root(unsigned bits = 48);

struct CrossingResult {
  int n = 0;
  std::vector<int> signs;       // sign of c_k(T2) - c_k(T1), k = 0..n
  std::optional<int> k_star;    // first k with c_k(T2) > c_k(T1)
  bool single_change = false;   // negative (or zero) before k_star, positive from k_star to n-2
  double x0 = 0;
};

CrossingResult crossing_analysis(int n);

/// Diameter n - 3 trees whose full coefficient vectors equal the closed form
/// for `which` (T1 or T2).
std::vector<Tree> match_closed_form(DiameterGapTree which, int n);

// ---------------------------------------------------------------------------
// Second extremal trees and family chains

struct SecondExtremalReport {
  int n = 0;
  bool caterpillar_second_smallest = false;  // C(n,3) <= every tree but the star
  bool broom_second_largest = false;         // B(n,3) >= every tree but the path
  bool caterpillar_chain = false;            // C(n,2) <= C(n,3) <= ... <= C(n,n-1)
  bool broom_chain = false;                  // B(n,n-1) <= ... <= B(n,2)
  std::optional<bool> pm_chain;              // A(n,n/2) <= ... <= A(n,2), even n only
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

SecondExtremalReport second_extremal_check(int n, int jobs = 1);

}  // namespace lapcoef

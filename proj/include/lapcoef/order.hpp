#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lapcoef/coeffs.hpp"

namespace lapcoef {

enum class PairTag {
  Equal,
  Dominates,          // one vector componentwise <= the other, not equal
  IncomparableType1,  // first and last differing indices disagree in direction
  IncomparableType2,  // they agree, but some middle index disagrees
};

std::string to_string(PairTag tag);

/// Outcome of comparing a against b.
///
/// r and s are the first and last indices where the vectors differ;
/// sign_at_r / sign_at_s are the signs of a[r] - b[r] and a[s] - b[s].
/// For Dominates, sign_at_r < 0 means a is dominated by b.
struct PairClass {
  PairTag tag = PairTag::Equal;
  std::optional<int> r;
  std::optional<int> s;
  int sign_at_r = 0;
  int sign_at_s = 0;

  bool first_dominated() const { return tag == PairTag::Dominates && sign_at_r < 0; }
  bool second_dominated() const { return tag == PairTag::Dominates && sign_at_r > 0; }

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// Throws std::invalid_argument on a length mismatch.
PairClass classify(const CoeffVector& a, const CoeffVector& b);
PairClass classify(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Guard for the pairwise sweeps: refuse n > max_n unless force is set.
struct SweepOptions {
  int jobs = 1;
  int max_n = 14;
  bool force = false;
};

/// Throws ResourceLimitError when n exceeds the guard without force.
void check_sweep_guard(int n, const SweepOptions& options);

/// Coefficient vectors (int64) of all n-vertex trees in enumeration order.
std::vector<std::vector<std::int64_t>> coefficient_table(int n, int jobs = 1);

/// One row of the incomparable-pair census.
struct ClassificationRow {
  int n = 0;
  std::uint64_t tree_count = 0;
  std::uint64_t type1_pairs = 0;
  std::uint64_t type2_pairs = 0;
  std::uint64_t incomparable_pairs = 0;
  std::uint64_t equal_pairs = 0;  // coefficient-equal pairs, in none of the columns above
  std::uint64_t percent_hundredths = 0;  // 100 * incomparable / C(trees, 2), round half up, in 1/100

  std::string percent() const;
  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

/// Round-half-up of 10000 * part / whole, i.e. a percentage in hundredths.
std::uint64_t percent_hundredths(std::uint64_t part, std::uint64_t whole);

/// Classifies every unordered pair of n-vertex trees. Throws
/// ResourceLimitError when n exceeds the guard and DomainError for n < 3.
ClassificationRow classify_all(int n, const SweepOptions& options = {});

/// Aggregates the classification of all pairs of the given vectors.
ClassificationRow classify_vectors(int n, std::span<const std::vector<std::int64_t>> vectors, int jobs = 1);

/// "n,trees,type1,type2,incomparable,percent"
std::string csv_header();
std::string to_csv(const ClassificationRow& row);

struct PosetStats {
  int n = 0;
  std::size_t tree_count = 0;
  std::size_t distinct_vectors = 0;  // after merging coefficient-equal trees
  std::size_t longest_chain = 0;     // in trees
  std::size_t max_antichain = 0;
};

/// Longest chain and largest antichain of the strict domination order on
/// pairwise distinct coefficient vectors.
PosetStats poset_stats(int n, const SweepOptions& options = {});

/// Same, on an explicit family of equal-length vectors (duplicates merged).
PosetStats poset_stats_of(std::span<const std::vector<std::int64_t>> vectors);

}  // namespace lapcoef

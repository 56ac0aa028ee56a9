#include "lapcoef/order.hpp"

#include <stdexcept>

#include "lapcoef/enumerate.hpp"
#include "lapcoef/error.hpp"
#include "lapcoef/parallel.hpp"

namespace lapcoef {

namespace {

template <class T>
int sign_of_difference(const T& a, const T& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}

template <class Vec>
PairClass classify_impl(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cannot compare coefficient vectors of different orders");
  const std::size_t len = a.size();
  std::size_t r = 0;
  while (r < len && a[r] == b[r]) ++r;
  PairClass out;
  if (r == len) return out;
  std::size_t s = len - 1;
  while (a[s] == b[s]) --s;
  out.r = static_cast<int>(r);
  out.s = static_cast<int>(s);
  out.sign_at_r = sign_of_difference(a[r], b[r]);
  out.sign_at_s = sign_of_difference(a[s], b[s]);
  if (out.sign_at_r != out.sign_at_s) {
    out.tag = PairTag::IncomparableType1;
    return out;
  }
  for (std::size_t k = r + 1; k < s; ++k) {
    if (sign_of_difference(a[k], b[k]) == -out.sign_at_r) {
      out.tag = PairTag::IncomparableType2;
      return out;
    }
  }
  out.tag = PairTag::Dominates;
  return out;
}

}  // namespace

std::string to_string(PairTag tag) {
  switch (tag) {
    case PairTag::Equal: return "equal";
    case PairTag::Dominates: return "dominates";
    case PairTag::IncomparableType1: return "incomparable-type1";
    case PairTag::IncomparableType2: return "incomparable-type2";
  }
  return "unknown";
}

PairClass classify(const CoeffVector& a, const CoeffVector& b) { return classify_impl(a.c, b.c); }

PairClass classify(std::span<const std::int64_t> a, std::span<const std::int64_t> b) { return classify_impl(a, b); }

std::uint64_t percent_hundredths(std::uint64_t part, std::uint64_t whole) {
  if (whole == 0) return 0;
  const auto num = static_cast<unsigned __int128>(part) * 20000u + whole;
  return static_cast<std::uint64_t>(num / (static_cast<unsigned __int128>(whole) * 2u));
}

std::string ClassificationRow::percent() const {
  std::string frac = std::to_string(percent_hundredths % 100);
  if (frac.size() < 2) frac.insert(frac.begin(), '0');
  return std::to_string(percent_hundredths / 100) + "." + frac;
}

ClassificationRow classify_vectors(int n, std::span<const std::vector<std::int64_t>> vectors, int jobs) {
  struct Counts {
    std::uint64_t type1 = 0, type2 = 0, equal = 0;
  };
  const std::size_t count = vectors.size();
  const int workers = effective_jobs(count, jobs);
  std::vector<Counts> partial(static_cast<std::size_t>(workers));
  // Rows are dealt round-robin so the triangular workload stays balanced.
  parallel_blocks(static_cast<std::size_t>(workers), workers, [&](std::size_t, std::size_t, int w) {
    Counts local;
    for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers)) {
      for (std::size_t j = i + 1; j < count; ++j) {
        switch (classify(std::span<const std::int64_t>(vectors[i]), std::span<const std::int64_t>(vectors[j])).tag) {
          case PairTag::IncomparableType1: ++local.type1; break;
          case PairTag::IncomparableType2: ++local.type2; break;
          case PairTag::Equal: ++local.equal; break;
          case PairTag::Dominates: break;
        }
      }
    }
    partial[static_cast<std::size_t>(w)] = local;
  });
  ClassificationRow row;
  row.n = n;
  row.tree_count = count;
  for (const auto& c : partial) {
    row.type1_pairs += c.type1;
    row.type2_pairs += c.type2;
    row.equal_pairs += c.equal;
  }
  row.incomparable_pairs = row.type1_pairs + row.type2_pairs;
  const std::uint64_t pairs = count < 2 ? 0 : static_cast<std::uint64_t>(count) * (count - 1) / 2;
  row.percent_hundredths = percent_hundredths(row.incomparable_pairs, pairs);
  return row;
}

void check_sweep_guard(int n, const SweepOptions& options) {
  if (n > options.max_n && !options.force) {
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the pairwise limit " +
                             std::to_string(options.max_n) + "; pass --force to override");
  }
}

std::vector<std::vector<std::int64_t>> coefficient_table(int n, int jobs) {
  const auto trees = all_trees(n);
  std::vector<std::vector<std::int64_t>> vectors(trees.size());
  parallel_blocks(trees.size(), jobs, [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) vectors[i] = coeffs_int64(trees[i]);
  });
  return vectors;
}

ClassificationRow classify_all(int n, const SweepOptions& options) {
  if (n < 3) throw DomainError("pair classification needs n >= 3");
  check_sweep_guard(n, options);
  const auto vectors = coefficient_table(n, options.jobs);
  return classify_vectors(n, vectors, options.jobs);
}

std::string csv_header() { return "n,trees,type1,type2,incomparable,percent"; }

std::string to_csv(const ClassificationRow& row) {
  return std::to_string(row.n) + "," + std::to_string(row.tree_count) + "," + std::to_string(row.type1_pairs) + "," +
         std::to_string(row.type2_pairs) + "," + std::to_string(row.incomparable_pairs) + "," + row.percent();
}

}  // namespace lapcoef

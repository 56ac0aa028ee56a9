#include <algorithm>
#include <string>

#include "lapcoef/analysis.hpp"
#include "lapcoef/error.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/order.hpp"
#include "lapcoef/parallel.hpp"

namespace lapcoef {

ExtremalResult extremal_sweep(int n, const TreeFilter& cls, ExtremeMode mode, int jobs) {
  ExtremalResult result;
  result.n = n;
  result.mode = mode;
  result.members = enumerate_filtered(n, cls);
  result.coefficients.resize(result.members.size());
  parallel_blocks(result.members.size(), jobs, [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) result.coefficients[i] = coeffs(result.members[i]);
  });
  if (result.empty()) return result;

  result.winners.resize(static_cast<std::size_t>(n + 1));
  std::vector<std::size_t> hits(result.members.size(), 0);
  for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
    const BigInt* best = &result.coefficients[0].c[k];
    for (const auto& cv : result.coefficients) {
      const bool better = mode == ExtremeMode::Min ? cv.c[k] < *best : cv.c[k] > *best;
      if (better) best = &cv.c[k];
    }
    for (std::size_t i = 0; i < result.members.size(); ++i) {
      if (result.coefficients[i].c[k] == *best) {
        result.winners[k].push_back(i);
        ++hits[i];
      }
    }
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] == static_cast<std::size_t>(n + 1)) {
      result.simultaneous = i;
      break;
    }
  }
  return result;
}

namespace {

// Each consecutive pair must satisfy chain[i] <= chain[i + 1].
bool monotone(const std::vector<Tree>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!dominated_by(coeffs(chain[i]), coeffs(chain[i + 1]))) return false;
  }
  return true;
}

}  // namespace

SecondExtremalReport second_extremal_check(int n, int jobs) {
  if (n < 4) throw DomainError("second extremal checks need n >= 4");
  SecondExtremalReport report;
  report.n = n;
  const auto trees = all_trees(n);
  std::vector<CoeffVector> vectors(trees.size());
  parallel_blocks(trees.size(), jobs, [&](std::size_t begin, std::size_t end, int) {
    for (std::size_t i = begin; i < end; ++i) vectors[i] = coeffs(trees[i]);
  });

  const auto star_code = canonical_code(star_tree(n));
  const auto path_code = canonical_code(path_tree(n));
  const auto cat3 = coeffs(caterpillar_nd(n, 3));
  const auto broom3 = coeffs(broom(n, 3));
  report.caterpillar_second_smallest = true;
  report.broom_second_largest = true;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const auto code = canonical_code(trees[i]);
    if (code != star_code && !dominated_by(cat3, vectors[i])) {
      report.caterpillar_second_smallest = false;
      report.failures.push_back("C(n,3) not dominated by tree #" + std::to_string(i));
    }
    if (code != path_code && !dominated_by(vectors[i], broom3)) {
      report.broom_second_largest = false;
      report.failures.push_back("B(n,3) does not dominate tree #" + std::to_string(i));
    }
  }

  std::vector<Tree> cats, brooms;
  for (int d = 2; d <= n - 1; ++d) cats.push_back(caterpillar_nd(n, d));
  for (int delta = n - 1; delta >= 2; --delta) brooms.push_back(broom(n, delta));
  report.caterpillar_chain = monotone(cats);
  report.broom_chain = monotone(brooms);
  if (!report.caterpillar_chain) report.failures.push_back("caterpillar chain not monotone");
  if (!report.broom_chain) report.failures.push_back("broom chain not monotone");
  if (n % 2 == 0) {
    std::vector<Tree> as;
    for (int delta = n / 2; delta >= 2; --delta) as.push_back(pm_tree(n, delta));
    report.pm_chain = monotone(as);
    if (!*report.pm_chain) report.failures.push_back("A(n, max_degree) chain not monotone");
  }
  return report;
}

}  // namespace lapcoef

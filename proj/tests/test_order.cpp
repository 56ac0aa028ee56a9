#include <random>
#include <stdexcept>

#include "doctest.h"
#include "lapcoef/coeffs.hpp"
#include "lapcoef/enumerate.hpp"
#include "lapcoef/error.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/order.hpp"
#include "oracles.hpp"

using namespace lapcoef;

namespace {

std::vector<std::int64_t> v64(std::initializer_list<std::int64_t> xs) { return xs; }

// Classification from the full sign pattern of a - b.
PairTag reference_tag(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<int> signs;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) signs.push_back(a[k] < b[k] ? -1 : 1);
  if (signs.empty()) return PairTag::Equal;
  bool up = std::count(signs.begin(), signs.end(), 1) > 0;
  bool down = std::count(signs.begin(), signs.end(), -1) > 0;
  if (!(up && down)) return PairTag::Dominates;
  return signs.front() != signs.back() ? PairTag::IncomparableType1 : PairTag::IncomparableType2;
}

std::vector<std::int64_t> charpoly_vector(const Tree& t) {
  std::vector<std::int64_t> out;
  for (const auto& x : coeffs_via_charpoly(t).c) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("classify examples") {
  auto star = coeffs(star_tree(4));
  auto path = coeffs(path_tree(4));
  auto pc = classify(star, path);
  CHECK(pc.tag == PairTag::Dominates);
  CHECK(pc.first_dominated());
  CHECK(pc.r == 2);
  CHECK(pc.s == 2);
  CHECK(classify(path, star).second_dominated());
  CHECK(classify(path, path).tag == PairTag::Equal);
  CHECK_FALSE(classify(path, path).r.has_value());

  auto a = v64({1, 14, 75, 196, 267, 190, 65, 8, 0});
  auto b = v64({1, 14, 74, 190, 259, 188, 66, 8, 0});
  auto w = classify(a, b);
  CHECK(w.tag == PairTag::IncomparableType1);
  CHECK(w.r == 2);
  CHECK(w.s == 6);
  CHECK(w.sign_at_r == 1);
  CHECK(w.sign_at_s == -1);

  CHECK(classify(v64({1, 5, 3, 7, 0}), v64({1, 4, 4, 6, 0})).tag == PairTag::IncomparableType2);
  CHECK_THROWS_AS(classify(v64({1, 2}), v64({1, 2, 0})), std::invalid_argument);
}

TEST_CASE("classify is antisymmetric and agrees with the sign pattern") {
  for (int n = 3; n <= 9; ++n) {
    auto table = coefficient_table(n);
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (std::size_t j = 0; j < table.size(); ++j) {
        auto ab = classify(table[i], table[j]);
        auto ba = classify(table[j], table[i]);
        CHECK(ab.tag == reference_tag(table[i], table[j]));
        CHECK(ab.tag == ba.tag);
        CHECK(ab.r == ba.r);
        CHECK(ab.s == ba.s);
        CHECK(ab.sign_at_r == -ba.sign_at_r);
      }
    }
  }
}

TEST_CASE("percent rounding") {
  CHECK(percent_hundredths(7, 253) == 277);
  CHECK(percent_hundredths(481, 5565) == 864);
  CHECK(percent_hundredths(1, 8) == 1250);
  CHECK(percent_hundredths(1, 16) == 625);
  CHECK(percent_hundredths(1, 800) == 13);  // 0.125 rounds half up
  CHECK(percent_hundredths(1, 1600) == 6);
  CHECK(percent_hundredths(3, 1600) == 19);
  CHECK(percent_hundredths(0, 0) == 0);
  ClassificationRow row;
  row.percent_hundredths = 5;
  CHECK(row.percent() == "0.05");
}

TEST_CASE("census rows") {
  auto r7 = classify_all(7);
  CHECK(to_csv(r7) == "7,11,0,0,0,0.00");
  auto r8 = classify_all(8);
  CHECK(to_csv(r8) == "8,23,7,0,7,2.77");
  auto r10 = classify_all(10, SweepOptions{3, 14, false});
  CHECK(to_csv(r10) == "10,106,476,5,481,8.64");
  CHECK(csv_header() == "n,trees,type1,type2,incomparable,percent");
  CHECK_THROWS_AS(classify_all(2), DomainError);
  CHECK_THROWS_AS(classify_all(15), ResourceLimitError);
  CHECK_NOTHROW(check_sweep_guard(15, SweepOptions{1, 14, true}));
}

TEST_CASE("census counts match a direct pair loop") {
  for (int n = 3; n <= 10; ++n) {
    std::vector<std::vector<std::int64_t>> vectors;
    for (const auto& t : all_trees(n)) vectors.push_back(charpoly_vector(t));
    std::uint64_t t1 = 0, t2 = 0, eq = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      for (std::size_t j = i + 1; j < vectors.size(); ++j) {
        switch (reference_tag(vectors[i], vectors[j])) {
          case PairTag::IncomparableType1: ++t1; break;
          case PairTag::IncomparableType2: ++t2; break;
          case PairTag::Equal: ++eq; break;
          default: break;
        }
      }
    }
    auto row = classify_all(n);
    CHECK(row.tree_count == vectors.size());
    CHECK(row.type1_pairs == t1);
    CHECK(row.type2_pairs == t2);
    CHECK(row.equal_pairs == eq);
    CHECK(row.incomparable_pairs == t1 + t2);
  }
}

TEST_CASE("census is independent of the worker count") {
  auto table = coefficient_table(10);
  auto one = classify_vectors(10, table, 1);
  for (int jobs : {2, 3, 7, 64}) CHECK(classify_vectors(10, table, jobs) == one);
  CHECK(coefficient_table(10, 4) == table);
}

TEST_CASE("poset statistics") {
  auto s7 = poset_stats(7);
  CHECK(s7.tree_count == 11);
  CHECK(s7.distinct_vectors == 11);
  CHECK(s7.longest_chain == 11);
  CHECK(s7.max_antichain == 1);

  auto s4 = poset_stats(4);
  CHECK(s4.longest_chain == 2);
  CHECK(s4.max_antichain == 1);

  CHECK(poset_stats(10).max_antichain >= 2);

  for (int n = 1; n <= 9; ++n) {
    auto table = coefficient_table(n);
    std::sort(table.begin(), table.end());
    table.erase(std::unique(table.begin(), table.end()), table.end());
    auto stats = poset_stats(n);
    CHECK(stats.distinct_vectors == table.size());
    CHECK(stats.longest_chain == oracle::longest_chain(table));
    CHECK(stats.max_antichain == oracle::max_antichain(table));
  }
}

TEST_CASE("antichain on synthetic orders") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> digit(0, 3);
  for (int round = 0; round < 50; ++round) {
    std::vector<std::vector<std::int64_t>> vectors(12);
    for (auto& v : vectors)
      for (int k = 0; k < 3; ++k) v.push_back(digit(rng));
    std::sort(vectors.begin(), vectors.end());
    vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
    auto stats = poset_stats_of(vectors);
    CHECK(stats.max_antichain == oracle::max_antichain(vectors));
    CHECK(stats.longest_chain == oracle::longest_chain(vectors));
  }
}

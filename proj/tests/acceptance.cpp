// Acceptance gate: prints one PASS/FAIL line per criterion.
//   acceptance            run every criterion
//   acceptance N [N...]   run only the listed criteria

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lapcoef/analysis.hpp"
#include "lapcoef/canonical.hpp"
#include "lapcoef/coeffs.hpp"
#include "lapcoef/enumerate.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/order.hpp"
#include "lapcoef/verify.hpp"

using namespace lapcoef;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

std::string str(std::size_t x) { return std::to_string(x); }

Outcome table_reproduction() {
  const std::string expected =
      "n,trees,type1,type2,incomparable,percent\n"
      "3,1,0,0,0,0.00\n"
      "4,2,0,0,0,0.00\n"
      "5,3,0,0,0,0.00\n"
      "6,6,0,0,0,0.00\n"
      "7,11,0,0,0,0.00\n"
      "8,23,7,0,7,2.77\n"
      "9,47,56,0,56,5.18\n"
      "10,106,476,5,481,8.64\n"
      "11,235,2786,22,2808,10.21\n"
      "12,551,18857,230,19087,12.60\n";
  std::istringstream in;
  std::ostringstream out, err;
  int status = cli::run({"lapcoef", "table1", "--max-n", "12"}, in, out, err);
  Outcome o;
  if (status != 0) o.fail("exit status " + std::to_string(status) + ": " + err.str());
  if (out.str() != expected) o.fail("table differs:\n" + out.str());
  if (o.pass) o.detail = "rows n=3..12 identical, n=12 -> 551,18857,230,19087,12.60";
  return o;
}

Outcome dual_engine() {
  Outcome o;
  std::size_t trees = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const auto& t : all_trees(n)) {
      ++trees;
      const auto a = coeffs_via_matchings(t);
      const auto b = coeffs_via_charpoly(t);
      if (a != b) o.fail("engines differ on n=" + std::to_string(n));
      const auto at = [&](int k) { return a[static_cast<std::size_t>(k)]; };
      bool ok = at(0) == 1 && at(1) == 2 * (n - 1) && at(n - 1) == n && at(n) == 0;
      if (n >= 2) {
        ok = ok && at(n - 2) == static_cast<long>(wiener(t));
        ok = ok && 2 * at(2) == 4L * n * n - 10L * n + 6 - static_cast<long>(zagreb(t));
      }
      if (!ok) o.fail("endpoint identity fails on n=" + std::to_string(n));
    }
  }
  if (trees != 201) o.fail("expected 201 trees, saw " + str(trees));
  if (o.pass) o.detail = str(trees) + " trees, engines identical, endpoint identities hold";
  return o;
}

Outcome witness_pair() {
  Outcome o;
  const std::vector<long> first{1, 14, 75, 196, 267, 190, 65, 8, 0};
  const std::vector<long> second{1, 14, 74, 190, 259, 188, 66, 8, 0};
  auto same = [](const CoeffVector& c, const std::vector<long>& v) {
    if (c.c.size() != v.size()) return false;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (c[k] != v[k]) return false;
    return true;
  };
  const auto trees = all_trees(8);
  std::vector<CoeffVector> vectors;
  for (const auto& t : trees) vectors.push_back(coeffs(t));
  std::size_t pairs = 0;
  std::optional<PairClass> found;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      bool hit = (same(vectors[i], first) && same(vectors[j], second)) ||
                 (same(vectors[i], second) && same(vectors[j], first));
      if (hit) {
        ++pairs;
        found = classify(vectors[i], vectors[j]);
      }
    }
  }
  if (trees.size() != 23) o.fail("expected 23 trees");
  if (pairs != 1) o.fail("matching pairs: " + str(pairs));
  if (found && found->tag != PairTag::IncomparableType1) o.fail("pair classifies as " + to_string(found->tag));
  auto row = classify_all(8);
  if (row.type1_pairs != 7) o.fail("type-1 pairs at n=8: " + str(row.type1_pairs));
  if (o.pass) o.detail = "unique pair, type 1 with r=" + std::to_string(*found->r) + " s=" + std::to_string(*found->s) +
                         ", 7 type-1 pairs";
  return o;
}

Outcome theorem_suite(int jobs) {
  Outcome o;
  const std::pair<Theorem, int> runs[] = {
      {Theorem::Delta, 10}, {Theorem::PathShift, 10}, {Theorem::TwoEdgeShift, 12}, {Theorem::Majorization, 12}};
  std::string summary;
  for (const auto& [theorem, max_n] : runs) {
    auto report = verify_monotonicity(theorem, max_n, jobs);
    if (!report.ok()) o.fail(to_string(theorem) + ": " + str(report.violations.size()) + " violations");
    if (report.instances == 0) o.fail(to_string(theorem) + ": no instances");
    if (!summary.empty()) summary += ", ";
    summary += to_string(theorem) + " " + str(report.instances);
  }
  if (o.pass) o.detail = "zero violations (" + summary + " instances)";
  return o;
}

Outcome extremal_theorems() {
  Outcome o;
  std::size_t checks = 0;
  std::size_t pm_top = 0, pm_classes = 0;
  for (int n = 4; n <= 12; ++n) {
    const auto trees = all_trees(n);
    std::vector<CoeffVector> c;
    for (const auto& t : trees) c.push_back(coeffs(t));
    // Members of the class that the reference does not bound (below for Min, above for Max).
    auto offenders = [&](const TreeFilter& f, const CoeffVector& ref, ExtremeMode mode) {
      std::size_t bad = 0, size = 0;
      for (std::size_t i = 0; i < trees.size(); ++i) {
        if (!f.matches(trees[i])) continue;
        ++size;
        ++checks;
        bool ok = mode == ExtremeMode::Min ? dominated_by(ref, c[i]) : dominated_by(c[i], ref);
        bad += !ok;
      }
      return std::pair{bad, size};
    };
    auto record = [&](const std::string& name, std::pair<std::size_t, std::size_t> r, const char* role) {
      if (r.first) o.fail(name + " not the " + role + " (" + str(r.first) + " of " + str(r.second) + " class members)");
    };
    const std::string at = "(" + std::to_string(n) + ",";
    for (int d = 2; d <= n - 1; ++d)
      record("C" + at + std::to_string(d) + ")",
             offenders(TreeFilter{.diameter = d}, coeffs(caterpillar_nd(n, d)), ExtremeMode::Min), "minimizer");
    for (int delta = 2; delta <= n - 1; ++delta)
      record("B" + at + std::to_string(delta) + ")",
             offenders(TreeFilter{.max_degree = delta}, coeffs(broom(n, delta)), ExtremeMode::Max), "maximizer");
    for (int legs = 3; legs <= n - 1; ++legs)
      record("balanced starlike" + at + std::to_string(legs) + ")",
             offenders(TreeFilter{.starlike_legs = legs}, coeffs(balanced_starlike(n, legs)), ExtremeMode::Min),
             "minimizer");
    if (n % 2 == 0) {
      for (int delta = 2; delta <= n / 2; ++delta) {
        const TreeFilter cls{.max_degree = delta, .perfect_matching = true};
        const auto ref = coeffs(pm_tree(n, delta));
        record("A" + at + std::to_string(delta) + ")", offenders(cls, ref, ExtremeMode::Min), "minimizer");
        ++pm_classes;
        pm_top += offenders(cls, ref, ExtremeMode::Max).first == 0;
      }
    }
  }
  if (o.pass) {
    o.detail = str(checks) + " componentwise comparisons, n=4..12";
  } else {
    o.detail += "; note: A(n,D) dominates its whole class in " + str(pm_top) + " of " + str(pm_classes) + " cases";
  }
  return o;
}

Outcome chain_construction() {
  Outcome o;
  std::string lengths;
  for (int n = 5; n <= 20; ++n) {
    auto chain = build_chain(n);
    auto check = check_chain(chain);
    if (!check.starts_at_star) o.fail("n=" + std::to_string(n) + " does not start at the star");
    if (!check.ends_at_path) o.fail("n=" + std::to_string(n) + " does not end at the path");
    if (!check.strictly_increasing) o.fail("n=" + std::to_string(n) + " has a non-strict step");
    const std::size_t required = static_cast<std::size_t>((n - 1) * (n - 1) / 4);
    const std::size_t closed_form = static_cast<std::size_t>(((n - 1) / 2) * ((n - 2) / 2));
    if (chain.length() != closed_form) {
      o.fail("n=" + std::to_string(n) + " length " + str(chain.length()) + " differs from floor((n-1)/2)*floor((n-2)/2)");
    }
    if (chain.length() != required) {
      if (!lengths.empty()) lengths += " ";
      lengths += std::to_string(n) + ":" + str(chain.length()) + "/" + str(required);
    }
  }
  if (!lengths.empty()) {
    // A strict chain on n vertices has at most (tree count - 1) steps; n=5 has 3 trees, so 4 steps cannot exist.
    o.fail("length floor((n-1)^2/4) not met (n:built/required) " + lengths +
           "; built length is floor((n-1)/2)*floor((n-2)/2); endpoints and strict domination hold for all n");
  }
  if (o.pass) o.detail = "n=5..20 endpoints, strict steps and lengths hold";
  return o;
}

Outcome closed_forms_and_crossing() {
  Outcome o;
  for (int n = 9; n <= 14; ++n) {
    std::vector<CoeffVector> forms(2);
    for (int k = 0; k <= n; ++k) {
      forms[0].c.push_back(closed_form_c(DiameterGapTree::T1, n, k));
      forms[1].c.push_back(closed_form_c(DiameterGapTree::T2, n, k));
    }
    std::vector<std::vector<Tree>> hits(2);
    for (const auto& t : enumerate_filtered(n, TreeFilter{.diameter = n - 3})) {
      const auto c = coeffs(t);
      for (int w = 0; w < 2; ++w)
        if (c == forms[static_cast<std::size_t>(w)]) hits[static_cast<std::size_t>(w)].push_back(t);
    }
    if (hits[0].size() != 1 || hits[1].size() != 1) {
      o.fail("n=" + std::to_string(n) + ": closed forms match " + str(hits[0].size()) + " and " + str(hits[1].size()) +
             " trees");
      continue;
    }
    const Tree& t1 = hits[0][0];
    const Tree& t2 = hits[1][0];
    if (zagreb(t2) - zagreb(t1) != 2) o.fail("n=" + std::to_string(n) + ": Zagreb difference");
    if (wiener(t2) - wiener(t1) != 2L * n - 14) o.fail("n=" + std::to_string(n) + ": Wiener difference");
  }
  const double root = limit_quartic_root().mid();
  if (std::abs(root - 0.771748) > 1e-6) o.fail("quartic root " + std::to_string(root));

  const int n = 200;
  auto crossing = crossing_analysis(n);
  const auto c1 = coeffs(diameter_gap_tree(DiameterGapTree::T1, n));
  const auto c2 = coeffs(diameter_gap_tree(DiameterGapTree::T2, n));
  std::optional<int> k_star;
  for (int k = 2; k <= n - 2 && !k_star; ++k)
    if (c2[static_cast<std::size_t>(k)] > c1[static_cast<std::size_t>(k)]) k_star = k;
  if (!k_star || crossing.k_star != k_star) {
    o.fail("k* at n=200 inconsistent");
  } else if (std::abs(static_cast<double>(*k_star) / n - root) > 0.05) {
    o.fail("k*/n = " + std::to_string(static_cast<double>(*k_star) / n));
  }
  if (o.pass) {
    std::ostringstream d;
    d.precision(7);
    d << "n=9..14 unique matches, Z and W gaps hold, x0=" << root << ", k*(200)=" << *k_star;
    o.detail = d.str();
  }
  return o;
}

Outcome second_extremal(int jobs) {
  Outcome o;
  for (int n = 4; n <= 12; ++n) {
    const auto star = star_tree(n);
    const auto path = path_tree(n);
    const auto low = coeffs(caterpillar_nd(n, 3));
    const auto high = coeffs(broom(n, 3));
    for (const auto& t : all_trees(n)) {
      const auto c = coeffs(t);
      if (!is_isomorphic(t, star) && !dominated_by(low, c)) o.fail("C(" + std::to_string(n) + ",3) not second smallest");
      if (!is_isomorphic(t, path) && !dominated_by(c, high)) o.fail("B(" + std::to_string(n) + ",3) not second largest");
    }
    auto report = second_extremal_check(n, jobs);
    if (!report.ok()) {
      for (const auto& f : report.failures) o.fail("n=" + std::to_string(n) + ": " + f);
    }
    if (!report.caterpillar_chain || !report.broom_chain || (n % 2 == 0 && !report.pm_chain.value_or(false))) {
      o.fail("n=" + std::to_string(n) + ": family chain not monotone");
    }
  }
  if (o.pass) o.detail = "n=4..12 second extremal trees and caterpillar, broom, A chains hold";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = 2;
  const std::map<int, std::function<Outcome()>> criteria{
      {1, table_reproduction},
      {2, dual_engine},
      {3, witness_pair},
      {4, [&] { return theorem_suite(jobs); }},
      {5, extremal_theorems},
      {6, chain_construction},
      {7, closed_forms_and_crossing},
      {8, [&] { return second_extremal(jobs); }},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    char* end = nullptr;
    long id = std::strtol(argv[i], &end, 10);
    if (*end != '\0' || !criteria.count(static_cast<int>(id))) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-8]...\n";
      return 2;
    }
    selected.push_back(static_cast<int>(id));
  }
  if (selected.empty())
    for (const auto& entry : criteria) selected.push_back(entry.first);

  bool all = true;
  for (int id : selected) {
    Outcome o;
    try {
      o = criteria.at(id)();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

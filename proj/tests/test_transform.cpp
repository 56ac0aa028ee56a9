#include <algorithm>

#include "doctest.h"
#include "lapcoef/canonical.hpp"
#include "lapcoef/coeffs.hpp"
#include "lapcoef/error.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/transform.hpp"
#include "lapcoef/verify.hpp"

using namespace lapcoef;

namespace {

bool weakly_below(const Tree& a, const Tree& b) {
  return dominated_by(coeffs_via_charpoly(a), coeffs_via_charpoly(b));
}

}  // namespace

TEST_CASE("pendant paths") {
  Tree t = starlike({2, 1, 3});
  auto paths = pendant_paths(t, 0);
  REQUIRE(paths.size() == 3);
  CHECK(paths[0].length() == 2);
  CHECK(paths[1].length() == 1);
  CHECK(paths[2].length() == 3);
  CHECK(pendant_path(t, 0, 1)->vertices == std::vector<Vertex>{1, 2});
  CHECK_FALSE(pendant_path(t, 1, 0).has_value());
  CHECK(pendant_paths(t, 2).empty());
}

TEST_CASE("delta transform") {
  SUBCASE("pendant leaf moves toward the rest of the tree") {
    Tree t(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}});
    Tree after = delta_transform(t, 1);
    CHECK(after.adjacent(5, 2));
    CHECK(after.adjacent(0, 1));
    CHECK(after.degree(1) == 2);
    CHECK(weakly_below(after, t));
  }
  SUBCASE("starlike with every neighbor pendant") {
    Tree t = starlike({1, 1, 2});
    Tree after = delta_transform(t, 0);
    CHECK(after.degree(0) == 2);
    CHECK(after.degree(3) == 3);
    CHECK(is_isomorphic(after, broom(5, 3)));
    CHECK(weakly_below(after, t));
  }
  SUBCASE("explicit w") {
    Tree t(9, {{0, 1}, {1, 2}, {2, 3}, {3, 7}, {7, 8}, {1, 4}, {4, 5}, {1, 6}});
    REQUIRE(center(t) == std::vector<Vertex>{2});
    Tree after = delta_transform(t, 1, 2);
    CHECK(after.adjacent(1, 4));
    CHECK(after.adjacent(2, 6));
    CHECK(after.adjacent(2, 0));
    CHECK(weakly_below(after, t));
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(delta_transform(path_tree(5), 2), PreconditionError);
    CHECK_THROWS_AS(delta_transform(caterpillar_nd(10, 5), 2, 0), PreconditionError);
    // two non-pendant neighbors
    Tree t(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}, {2, 7}});
    CHECK_THROWS_AS(delta_transform(t, 2), PreconditionError);
  }
}

TEST_CASE("path shift") {
  Tree b = broom(6, 3);
  Vertex hub = 1;
  REQUIRE(b.degree(hub) == 3);
  Tree shifted = path_shift(b, hub);
  CHECK(is_isomorphic(shifted, path_tree(6)));
  CHECK(weakly_below(b, shifted));

  Tree t = starlike({2, 2});
  Tree after = path_shift(t, 0);
  CHECK(is_isomorphic(after, starlike({3, 1})));
  CHECK(weakly_below(t, after));

  CHECK_THROWS_AS(path_shift(path_tree(5), 0), PreconditionError);
  CHECK_THROWS_AS(path_shift(starlike({1, 3}), 0, 1, 2), PreconditionError);
  CHECK_THROWS_AS(path_shift(t, 0, 1, 1), PreconditionError);
}

TEST_CASE("two-edge shift") {
  Tree a = pm_tree(12, 3);
  Tree after = two_edge_shift(a, 0);
  CHECK(is_isomorphic(after, path_tree(12)));
  CHECK(weakly_below(a, after));

  Tree t = starlike({2, 2});
  Tree p = two_edge_shift(t, 0);
  CHECK(is_isomorphic(p, path_tree(5)));
  CHECK(weakly_below(t, p));

  Tree e1 = pm_tree(10, 3);
  REQUIRE(has_perfect_matching(e1));
  CHECK(has_perfect_matching(two_edge_shift(e1, 0)));

  CHECK_THROWS_AS(two_edge_shift(starlike({3, 1}), 0), PreconditionError);
}

TEST_CASE("pendant slide") {
  Tree t = star_tree(5);
  Tree moved = pendant_slide(t, 4, 3);
  CHECK(moved.adjacent(3, 4));
  CHECK_FALSE(moved.adjacent(0, 4));
  CHECK_THROWS_AS(pendant_slide(t, 0, 1), PreconditionError);
  CHECK_THROWS_AS(pendant_slide(path_tree(5), 0, 3), PreconditionError);
}

TEST_CASE("majorization helpers") {
  CHECK(majorizes({5, 1, 1}, {3, 2, 2}));
  CHECK_FALSE(majorizes({3, 2, 2}, {5, 1, 1}));
  CHECK(majorizes({3, 3}, {3, 3}));
  CHECK_FALSE(majorizes({4, 1, 1}, {3, 3}));
  auto parts = partitions(6, 3);
  std::sort(parts.begin(), parts.end());
  CHECK(parts == std::vector<std::vector<int>>{{2, 2, 2}, {3, 2, 1}, {4, 1, 1}});
  CHECK(partitions(3, 4).empty());
}

TEST_CASE("monotonicity harness at small n") {
  for (auto th : {Theorem::Delta, Theorem::PathShift, Theorem::TwoEdgeShift, Theorem::Majorization}) {
    auto report = verify_monotonicity(th, 9, 2);
    CHECK_MESSAGE(report.ok(), to_string(th));
    CHECK(report.instances > 0);
    auto again = verify_monotonicity(th, 9, 1);
    CHECK(again.instances == report.instances);
    CHECK(again.trees_examined == report.trees_examined);
  }
  CHECK(parse_theorem("path_shift") == Theorem::PathShift);
  CHECK_FALSE(parse_theorem("sigma").has_value());
}

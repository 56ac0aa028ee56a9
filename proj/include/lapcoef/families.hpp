#pragma once

#include <variant>
#include <vector>

#include "lapcoef/tree.hpp"

namespace lapcoef {

// Named tree families. Labeling is deterministic:
//   - caterpillar-shaped families (Path, Caterpillar, CatNd, Broom) label the
//     spine v_0..v_d as 0..d, then pendant vertices in increasing spine order;
//   - Star labels the center 0;
//   - starlike families label the root 0, then each leg outward, legs in the
//     order given (Balanced and PMTree legs are listed longest first).
namespace family {

struct Path { int n; };
struct Star { int n; };
/// pendants[i] leaves hang off spine vertex v_{i+1}; spine length is pendants.size() + 1.
struct Caterpillar { std::vector<int> pendants; };
/// Spine of length d, all n - d - 1 remaining vertices pendant at v_{floor(d/2)}.
struct CatNd { int n; int d; };
/// Star on max_degree + 1 vertices with a path hanging off one leaf.
struct Broom { int n; int max_degree; };
struct Starlike { std::vector<int> legs; };
struct BalancedStarlike { int n; int legs; };
/// A(n, max_degree), even n: root with one pendant edge,
/// max_degree - 2 pendant paths of length 2 and a pendant path of length
/// n - 2 * max_degree + 2.
struct PMTree { int n; int max_degree; };

}  // namespace family

using FamilySpec = std::variant<family::Path, family::Star, family::Caterpillar, family::CatNd, family::Broom,
                                 family::Starlike, family::BalancedStarlike, family::PMTree>;

/// Throws DomainError on invalid parameters.
Tree build_family(const FamilySpec& spec);

inline Tree path_tree(int n) { return build_family(family::Path{n}); }
inline Tree star_tree(int n) { return build_family(family::Star{n}); }
inline Tree caterpillar_nd(int n, int d) { return build_family(family::CatNd{n, d}); }
inline Tree broom(int n, int max_degree) { return build_family(family::Broom{n, max_degree}); }
inline Tree starlike(std::vector<int> legs) { return build_family(family::Starlike{std::move(legs)}); }
inline Tree balanced_starlike(int n, int legs) { return build_family(family::BalancedStarlike{n, legs}); }
inline Tree pm_tree(int n, int max_degree) { return build_family(family::PMTree{n, max_degree}); }

/// Leg lengths of the balanced starlike tree, longest first.
std::vector<int> balanced_legs(int n, int legs);

/// Leg lengths of A(n, max_degree), longest first.
std::vector<int> pm_tree_legs(int n, int max_degree);

}  // namespace lapcoef

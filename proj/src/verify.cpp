#include "lapcoef/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "lapcoef/coeffs.hpp"
#include "lapcoef/enumerate.hpp"
#include "lapcoef/error.hpp"
#include "lapcoef/families.hpp"
#include "lapcoef/parallel.hpp"

namespace lapcoef {

namespace {

// Index of the first k with lower[k] > upper[k], or -1.
int first_excess(const CoeffVector& lower, const CoeffVector& upper) {
  for (std::size_t k = 0; k < lower.c.size(); ++k) {
    if (lower.c[k] > upper.c[k]) return static_cast<int>(k);
  }
  return -1;
}

struct TreeFindings {
  std::size_t instances = 0;
  std::vector<Violation> violations;
};

void check(TreeFindings& out, TransformKind kind, std::vector<Vertex> site, const Tree& before, const Tree& after,
           bool increases, const CoeffVector& before_coeffs) {
  ++out.instances;
  const auto after_coeffs = coeffs(after);
  const int bad = increases ? first_excess(before_coeffs, after_coeffs) : first_excess(after_coeffs, before_coeffs);
  if (bad >= 0) {
    out.violations.push_back({{kind, std::move(site), before, after}, bad,
                              increases ? "coefficient decreased" : "coefficient increased"});
  }
}

TreeFindings check_delta(const Tree& t) {
  TreeFindings out;
  const int n = t.order();
  const auto centers = center(t);
  std::vector<int> dist(static_cast<std::size_t>(n), n), towards(static_cast<std::size_t>(n), -1);
  for (Vertex c : centers) {
    auto d = distances_from(t, c);
    for (Vertex v = 0; v < n; ++v) dist[static_cast<std::size_t>(v)] = std::min(dist[static_cast<std::size_t>(v)], d[static_cast<std::size_t>(v)]);
  }
  int furthest = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) >= 3) furthest = std::max(furthest, dist[static_cast<std::size_t>(v)]);
  }
  if (furthest < 0) return out;
  std::optional<CoeffVector> before_coeffs;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) < 3 || dist[static_cast<std::size_t>(v)] != furthest) continue;
    Vertex w = -1;
    if (furthest == 0) {
      // v is a center vertex; it has a neighbor towards the center only in
      // a bicentral tree
      if (centers.size() < 2) continue;
      w = centers[0] == v ? centers[1] : centers[0];
    } else {
      for (Vertex x : t.neighbors(v)) {
        if (dist[static_cast<std::size_t>(x)] == furthest - 1) w = x;
      }
    }
    if (!before_coeffs) before_coeffs = coeffs(t);
    check(out, TransformKind::Delta, {v, w}, t, delta_transform(t, v, w), false, *before_coeffs);
  }
  return out;
}

TreeFindings check_shift(const Tree& t, bool two_edges) {
  TreeFindings out;
  const int min_q = two_edges ? 2 : 1;
  std::optional<CoeffVector> before_coeffs;
  for (Vertex w = 0; w < t.order(); ++w) {
    auto paths = pendant_paths(t, w);
    for (const auto& p : paths) {
      for (const auto& q : paths) {
        if (p.start() == q.start() || p.length() < q.length() || q.length() < min_q) continue;
        if (!before_coeffs) before_coeffs = coeffs(t);
        const Tree after = two_edges ? two_edge_shift(t, w, p.start(), q.start()) : path_shift(t, w, p.start(), q.start());
        const TransformKind kind = two_edges ? TransformKind::TwoEdgeShift : TransformKind::PathShift;
        check(out, kind, {w, p.start(), q.start()}, t, after, true, *before_coeffs);
        if (two_edges && !has_perfect_matching(after)) {
          out.violations.push_back({{kind, {w, p.start(), q.start()}, t, after}, -1, "perfect matching lost"});
        }
      }
    }
  }
  return out;
}

std::string legs_string(const std::vector<int>& legs) {
  std::string s = "(";
  for (std::size_t i = 0; i < legs.size(); ++i) s += (i ? "," : "") + std::to_string(legs[i]);
  return s + ")";
}

MonotonicityReport verify_majorization(int max_n) {
  MonotonicityReport report;
  report.theorem = Theorem::Majorization;
  report.max_n = max_n;
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      const auto legs = partitions(n - 1, k);
      std::vector<Tree> trees;
      std::vector<CoeffVector> vectors;
      for (const auto& l : legs) {
        trees.push_back(starlike(l));
        vectors.push_back(coeffs(trees.back()));
      }
      report.trees_examined += trees.size();
      for (std::size_t i = 0; i < legs.size(); ++i) {
        for (std::size_t j = 0; j < legs.size(); ++j) {
          if (i == j || !majorizes(legs[j], legs[i])) continue;
          ++report.instances;
          const int bad = first_excess(vectors[i], vectors[j]);
          if (bad >= 0) {
            report.violations.push_back({{TransformKind::PathShift, {}, trees[i], trees[j]}, bad,
                                         legs_string(legs[j]) + " majorizes " + legs_string(legs[i])});
          }
        }
      }
    }
  }
  return report;
}

}  // namespace

std::string to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::Delta: return "delta";
    case Theorem::PathShift: return "path_shift";
    case Theorem::TwoEdgeShift: return "two_edge_shift";
    case Theorem::Majorization: return "majorization";
  }
  return "unknown";
}

std::optional<Theorem> parse_theorem(const std::string& name) {
  for (Theorem t : {Theorem::Delta, Theorem::PathShift, Theorem::TwoEdgeShift, Theorem::Majorization}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

bool majorizes(const std::vector<int>& q, const std::vector<int>& p) {
  if (q.size() != p.size()) return false;
  long sum_q = 0, sum_p = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    sum_q += q[i];
    sum_p += p[i];
    if (sum_q < sum_p) return false;
  }
  return sum_q == sum_p;
}

std::vector<std::vector<int>> partitions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts < 1 || total < parts) return out;
  std::vector<int> current;
  // largest part first, each part at most the previous one
  auto recurse = [&](auto&& self, int remaining, int slots, int cap) -> void {
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int hi = std::min(cap, remaining - (slots - 1));
    const int lo = (remaining + slots - 1) / slots;
    for (int part = hi; part >= lo; --part) {
      current.push_back(part);
      self(self, remaining - part, slots - 1, part);
      current.pop_back();
    }
  };
  recurse(recurse, total, parts, total);
  return out;
}

MonotonicityReport verify_monotonicity(Theorem theorem, int max_n, int jobs) {
  if (max_n < 1 || max_n > kMaxEnumerationOrder) throw DomainError("max_n out of range");
  if (theorem == Theorem::Majorization) return verify_majorization(max_n);

  MonotonicityReport report;
  report.theorem = theorem;
  report.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    if (theorem == Theorem::TwoEdgeShift && n % 2 != 0) continue;
    const auto trees = theorem == Theorem::TwoEdgeShift ? enumerate_filtered(n, TreeFilter{.perfect_matching = true})
                                                         : all_trees(n);
    std::vector<TreeFindings> findings(trees.size());
    parallel_blocks(trees.size(), jobs, [&](std::size_t begin, std::size_t end, int) {
      for (std::size_t i = begin; i < end; ++i) {
        findings[i] = theorem == Theorem::Delta ? check_delta(trees[i]) : check_shift(trees[i], theorem == Theorem::TwoEdgeShift);
      }
    });
    report.trees_examined += trees.size();
    for (auto& f : findings) {
      report.instances += f.instances;
      for (auto& v : f.violations) report.violations.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace lapcoef

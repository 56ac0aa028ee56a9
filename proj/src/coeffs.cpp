#include "lapcoef/coeffs.hpp"

#include <algorithm>
#include <stdexcept>

namespace lapcoef {

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

BigInt path_matching_count(int n, int k) {
  if (n < 0 || k < 0) return 0;
  return binomial(n - k, k);
}

namespace {

struct CheckedInt {
  std::int64_t v = 0;

  CheckedInt() = default;
  CheckedInt(std::int64_t x) : v(x) {}

  CheckedInt& operator+=(const CheckedInt& o) {
    if (__builtin_add_overflow(v, o.v, &v)) throw std::overflow_error("coefficient exceeds int64");
    return *this;
  }
  friend CheckedInt operator*(const CheckedInt& a, const CheckedInt& b) {
    CheckedInt r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw std::overflow_error("coefficient exceeds int64");
    return r;
  }
  friend CheckedInt operator+(CheckedInt a, const CheckedInt& b) { return a += b; }
  friend bool operator==(const CheckedInt& a, const CheckedInt& b) { return a.v == b.v; }
};

// out += a * b (polynomial product, coefficients indexed by degree)
template <class T>
void add_product(std::vector<T>& out, const std::vector<T>& a, const std::vector<T>& b, std::size_t shift) {
  if (a.empty() || b.empty()) return;
  if (out.size() < a.size() + b.size() - 1 + shift) out.resize(a.size() + b.size() - 1 + shift);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == T(0)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j + shift] += a[i] * b[j];
  }
}

// For each vertex v, free[v] counts matchings of v's subtree leaving v
// unmatched and used[v] those matching v to a child, both by size.
// Merging child c:
//   free' = free * (free_c + used_c)
//   used' = used * (free_c + used_c) + x * free * free_c
template <class T>
std::vector<T> matching_counts(const Tree& t) {
  const int n = t.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[static_cast<std::size_t>(w)] < 0) {
        parent[static_cast<std::size_t>(w)] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<T>> free(static_cast<std::size_t>(n), std::vector<T>{T(1)});
  std::vector<std::vector<T>> used(static_cast<std::size_t>(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex c = *it;
    if (c == 0) break;
    const auto p = static_cast<std::size_t>(parent[static_cast<std::size_t>(c)]);
    auto& fc = free[static_cast<std::size_t>(c)];
    auto& uc = used[static_cast<std::size_t>(c)];
    std::vector<T> any_c = fc;
    if (any_c.size() < uc.size()) any_c.resize(uc.size());
    for (std::size_t i = 0; i < uc.size(); ++i) any_c[i] += uc[i];

    std::vector<T> new_free, new_used;
    add_product(new_free, free[p], any_c, 0);
    add_product(new_used, used[p], any_c, 0);
    add_product(new_used, free[p], fc, 1);
    free[p] = std::move(new_free);
    used[p] = std::move(new_used);
    fc.clear();
    fc.shrink_to_fit();
    uc.clear();
    uc.shrink_to_fit();
  }
  std::vector<T> total = free[0];
  if (total.size() < used[0].size()) total.resize(used[0].size());
  for (std::size_t i = 0; i < used[0].size(); ++i) total[i] += used[0][i];
  total.resize(static_cast<std::size_t>(n / 2 + 1));
  return total;
}

}  // namespace

MatchingVector matchings(const Tree& t) { return MatchingVector{matching_counts<BigInt>(t)}; }

CoeffVector coeffs_via_matchings(const Tree& t) {
  auto m = matching_counts<BigInt>(subdivision(t));
  m.resize(static_cast<std::size_t>(t.order() + 1));
  return CoeffVector{std::move(m)};
}

std::vector<std::int64_t> coeffs_int64(const Tree& t) {
  auto m = matching_counts<CheckedInt>(subdivision(t));
  std::vector<std::int64_t> out(static_cast<std::size_t>(t.order() + 1), 0);
  for (std::size_t i = 0; i < m.size() && i < out.size(); ++i) out[i] = m[i].v;
  return out;
}

std::string to_string(const CoeffVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.c.size(); ++k) {
    if (k) out += ',';
    out += v.c[k].get_str();
  }
  return out;
}

bool dominated_by(const CoeffVector& a, const CoeffVector& b) {
  if (a.c.size() != b.c.size()) throw std::invalid_argument("coefficient vectors of different orders");
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    if (a.c[k] > b.c[k]) return false;
  }
  return true;
}

}  // namespace lapcoef

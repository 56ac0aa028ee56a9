#include <stdexcept>
#include <utility>

#include "lapcoef/coeffs.hpp"

namespace lapcoef {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Bareiss fraction-free elimination; every division is exact.
BigInt bareiss_determinant(Matrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        a[i][j] = std::move(v);
      }
    }
    prev_pivot = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

Matrix laplacian(const Tree& t) {
  const auto n = static_cast<std::size_t>(t.order());
  Matrix l(n, std::vector<BigInt>(n, 0));
  for (const auto& e : t.edges()) {
    const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
    l[u][v] = -1;
    l[v][u] = -1;
    l[u][u] += 1;
    l[v][v] += 1;
  }
  return l;
}

}  // namespace

CoeffVector coeffs_via_charpoly(const Tree& t) {
  const int n = t.order();
  const Matrix l = laplacian(t);

  // p(x) = det(xI - L) sampled at x = 0..n
  std::vector<BigInt> diff(static_cast<std::size_t>(n + 1));
  for (int x = 0; x <= n; ++x) {
    Matrix m = l;
    for (auto& row : m) {
      for (auto& v : row) v = -v;
    }
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += x;
    diff[static_cast<std::size_t>(x)] = bareiss_determinant(std::move(m));
  }

  // Forward differences: diff[k] becomes Delta^k p(0).
  for (int k = 1; k <= n; ++k) {
    for (int i = n; i >= k; --i) diff[static_cast<std::size_t>(i)] -= diff[static_cast<std::size_t>(i - 1)];
  }

  // p(x) = sum_k Delta^k p(0) * x(x-1)...(x-k+1) / k!; accumulate n! * p(x)
  // with integer weights n!/k! and divide once at the end.
  std::vector<BigInt> scaled(static_cast<std::size_t>(n + 1), 0);
  std::vector<BigInt> falling{1};  // x(x-1)...(x-k+1), by degree
  BigInt n_factorial;
  mpz_fac_ui(n_factorial.get_mpz_t(), static_cast<unsigned long>(n));
  BigInt weight = n_factorial;  // n!/k!
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      std::vector<BigInt> next(falling.size() + 1, 0);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * (k - 1);
      }
      falling = std::move(next);
      mpz_divexact_ui(weight.get_mpz_t(), weight.get_mpz_t(), static_cast<unsigned long>(k));
    }
    const BigInt factor = diff[static_cast<std::size_t>(k)] * weight;
    for (std::size_t i = 0; i < falling.size(); ++i) scaled[i] += factor * falling[i];
  }

  CoeffVector out;
  out.c.resize(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    BigInt& monomial = scaled[static_cast<std::size_t>(n - k)];  // coefficient of x^(n-k)
    if (!mpz_divisible_p(monomial.get_mpz_t(), n_factorial.get_mpz_t())) {
      throw std::logic_error("characteristic polynomial interpolation is not integral");
    }
    BigInt value;
    mpz_divexact(value.get_mpz_t(), monomial.get_mpz_t(), n_factorial.get_mpz_t());
    if (k % 2 == 1) value = -value;
    if (value < 0) throw std::logic_error("Laplacian characteristic polynomial violates the alternating sign pattern");
    out.c[static_cast<std::size_t>(k)] = std::move(value);
  }
  return out;
}

}  // namespace lapcoef

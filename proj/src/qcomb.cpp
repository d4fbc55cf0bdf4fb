#include "rankdesigns/qcomb.hpp"

#include <stdexcept>

#include "rankdesigns/error.hpp"

namespace rankdesigns {

BigCount big_pow(std::uint64_t base, std::uint64_t exponent) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

BigCount q_binomial(std::int64_t big_n, std::int64_t m, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (big_n < 0 || m < 0) throw std::invalid_argument("q_binomial arguments must be nonnegative");
  if (m > big_n) return 0;
  BigCount num = 1, den = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    num *= big_pow(q, big_n) - big_pow(q, i);
    den *= big_pow(q, m) - big_pow(q, i);
  }
  return num / den;
}

std::vector<std::vector<BigCount>> q_pascal_matrix(std::span<const int> weights, int n, std::uint64_t q) {
  const std::size_t r = weights.size();
  std::vector<std::vector<BigCount>> a(r, std::vector<BigCount>(r));
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < r; ++j) a[l][j] = q_binomial(n - weights[j], static_cast<std::int64_t>(l), q);
  return a;
}

std::vector<BigCount> q_pascal_system(std::span<const int> weights, int n, std::uint64_t q,
                                      std::span<const BigCount> rhs) {
  const std::size_t r = weights.size();
  if (rhs.size() != r) throw std::invalid_argument("right-hand side length differs from the number of unknowns");
  for (std::size_t j = 0; j < r; ++j) {
    if (weights[j] < 0 || weights[j] > n) throw std::invalid_argument("weight index outside [0, n]");
    if (j > 0 && weights[j] <= weights[j - 1]) throw std::invalid_argument("weights must be strictly increasing");
  }
  auto coeff = q_pascal_matrix(weights, n, q);
  std::vector<std::vector<mpq_class>> a(r, std::vector<mpq_class>(r + 1));
  for (std::size_t l = 0; l < r; ++l) {
    for (std::size_t j = 0; j < r; ++j) a[l][j] = coeff[l][j];
    a[l][r] = rhs[l];
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t sel = c;
    while (sel < r && a[sel][c] == 0) ++sel;
    if (sel == r) throw std::logic_error("q-Pascal system is singular");
    std::swap(a[sel], a[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class factor = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= r; ++j) a[i][j] -= factor * a[c][j];
    }
  }
  std::vector<BigCount> out(r);
  for (std::size_t j = 0; j < r; ++j) {
    mpq_class v = a[j][r] / a[j][j];
    v.canonicalize();
    if (v.get_den() != 1 || v < 0) throw DomainError("inconsistent weight system");
    out[j] = v.get_num();
  }
  return out;
}

BigCount determinant(std::vector<std::vector<BigCount>> a) {
  // Bareiss elimination keeps every intermediate integral.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigCount prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(a[sel], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

mpq_class q_pascal_minor_formula(std::span<const int> r, std::uint64_t q) {
  const std::size_t l = r.size();
  mpq_class v = mpq_class(big_pow(q, l * (l - (l > 0 ? 1 : 0)) / 2));
  for (std::size_t i = 1; i <= l; ++i)
    for (std::size_t j = i + 1; j <= l; ++j) {
      mpq_class num = mpq_class(big_pow(q, r[j - 1]) - big_pow(q, r[i - 1]));
      mpq_class den = mpq_class(big_pow(q, j) - big_pow(q, i));
      v *= num / den;
    }
  v.canonicalize();
  return v;
}

}  // namespace rankdesigns

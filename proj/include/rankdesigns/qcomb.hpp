#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace rankdesigns {

/// Exact nonnegative count (weights, lambdas, Gaussian coefficients).
using BigCount = mpz_class;

BigCount big_pow(std::uint64_t base, std::uint64_t exponent);

/// Gaussian coefficient [N choose M]_q; 0 when M > N.
BigCount q_binomial(std::int64_t big_n, std::int64_t m, std::uint64_t q);

/// The r x r matrix ( [n - i_j choose l]_q ), rows l = 0..r-1, columns j.
std::vector<std::vector<BigCount>> q_pascal_matrix(std::span<const int> weights, int n, std::uint64_t q);

/// Solves sum_j W_j [n - i_j choose l]_q = rhs_l, l = 0..r-1, exactly over Q.
///
/// `weights` must be strictly increasing in [0, n]. Throws DomainError
/// "inconsistent weight system" when the unique solution is not a vector of
/// nonnegative integers.
std::vector<BigCount> q_pascal_system(std::span<const int> weights, int n, std::uint64_t q,
                                      std::span<const BigCount> rhs);

/// Exact determinant of a square integer matrix (fraction-free elimination).
BigCount determinant(std::vector<std::vector<BigCount>> a);

/// Closed form q^{binom(l,2)} prod_{i<j} (q^{r_j} - q^{r_i}) / (q^j - q^i)
/// for det([r_i choose j-1]_q)_{i,j}.
mpq_class q_pascal_minor_formula(std::span<const int> r, std::uint64_t q);

}  // namespace rankdesigns

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rankdesigns/designs.hpp"
#include "rankdesigns/error.hpp"
#include "rankdesigns/qcomb.hpp"

using namespace rankdesigns;

TEST_CASE("q-binomial examples") {
  for (std::uint64_t q : {2, 3, 4, 5})
    for (int n = 0; n < 7; ++n) CHECK(q_binomial(n, 0, q) == 1);
  CHECK(q_binomial(4, 2, 2) == 35);
  CHECK(q_binomial(3, 1, 2) == 7);
  CHECK(q_binomial(2, 3, 2) == 0);
}

TEST_CASE("q-binomial matches the product formula and is symmetric") {
  for (std::uint64_t q : {2, 3, 4})
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned m = 0; m <= n; ++m) {
        CHECK(q_binomial(n, m, q) == q_binomial(n, n - m, q));
        if (q < 4 || n <= 6) CHECK(q_binomial(n, m, q) == static_cast<unsigned long>(oracle::gaussian(n, m, q)));
      }
}

TEST_CASE("q-binomial counts the enumerated subspaces") {
  for (std::uint64_t q : {2, 3})
    for (std::size_t n = 0; n <= 5; ++n)
      for (std::size_t t = 0; t <= n; ++t)
        CHECK(q_binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(t), q) ==
              static_cast<unsigned long>(enumerate_subspaces(n, t, q).size()));
}

TEST_CASE("single unknown: W = rhs_0") {
  std::vector<int> w{3};
  std::vector<BigCount> rhs{BigCount(42)};
  CHECK(q_pascal_system(w, 5, 2, rhs) == std::vector<BigCount>{42});
}

TEST_CASE("reconstruct the spread dual distribution from two MacWilliams equations") {
  // Gamma(C) at q = 2, s = 2: n = m = 4, k = 8, W(C) = (1, 0, 75, 0, 180).
  // l = 0: W_2 + W_4 = 2^{16-8} - W_0 = 255.
  // l = 1: W_2 [2 choose 1] + W_4 [0 choose 1] = 2^{12-8} [4 choose 1] - [4 choose 1] = 225.
  std::vector<int> weights{2, 4};
  std::vector<BigCount> rhs{255, 225};
  auto sol = q_pascal_system(weights, 4, 2, rhs);
  CHECK(sol == std::vector<BigCount>{75, 180});
}

TEST_CASE("3x3 minor at n = 5, q = 2, weights {1,2,3}") {
  std::vector<int> weights{1, 2, 3};
  auto a = q_pascal_matrix(weights, 5, 2);
  BigCount det = determinant(a);
  CHECK(det != 0);
  std::vector<int> r{4, 3, 2};
  CHECK(mpq_class(det) == q_pascal_minor_formula(r, 2));
}

TEST_CASE("the minor identity holds for every index choice with l <= 4, n <= 6, q = 2") {
  int checked = 0;
  for (int n = 1; n <= 6; ++n)
    for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) {
      std::vector<int> weights;
      for (int i = 0; i <= n; ++i)
        if (mask & (1u << i)) weights.push_back(i);
      if (weights.size() > 4) continue;
      std::vector<int> r;
      for (int i : weights) r.push_back(n - i);
      BigCount det = determinant(q_pascal_matrix(weights, n, 2));
      CHECK(mpq_class(det) == q_pascal_minor_formula(r, 2));
      CHECK(det != 0);
      ++checked;
    }
  CHECK(checked > 100);
}

TEST_CASE("inconsistent systems are rejected") {
  // 3 W = 1 has no integer solution.
  std::vector<int> weights{2, 4};
  std::vector<BigCount> rhs{0, 1};
  CHECK_THROWS_AS(q_pascal_system(weights, 4, 2, rhs), DomainError);
  // A negative solution: W_2 = 75, W_4 = -1.
  std::vector<BigCount> neg{74, 225};
  CHECK_THROWS_AS(q_pascal_system(weights, 4, 2, neg), DomainError);
  std::vector<int> unsorted{4, 2};
  CHECK_THROWS_AS(q_pascal_system(unsorted, 4, 2, rhs), std::invalid_argument);
}

TEST_CASE("big_pow is exact beyond 64 bits") {
  CHECK(big_pow(2, 100).get_str() == "1267650600228229401496703205376");
  // q-Pascal recurrence [n, k] = [n-1, k-1] + q^k [n-1, k].
  std::vector<std::vector<BigCount>> t(21, std::vector<BigCount>(21, 0));
  for (int n = 0; n <= 20; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + big_pow(2, k) * t[n - 1][k];
  }
  for (int k = 0; k <= 20; ++k) CHECK(q_binomial(20, k, 2) == t[20][k]);
  CHECK(q_binomial(20, 10, 2).get_str() == "4380990637147598617372537398675");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "rankdesigns/designs.hpp"
#include "rankdesigns/linalg.hpp"

using namespace rankdesigns;

namespace {

FqMatrix mat(const std::shared_ptr<const Field>& f, std::size_t r, std::size_t c, std::vector<Elem> v) {
  return FqMatrix(f, r, c, std::move(v));
}

FqMatrix unit_rows(const std::shared_ptr<const Field>& f, std::size_t n, std::vector<std::size_t> idx) {
  FqMatrix x(f, idx.size(), n);
  for (std::size_t i = 0; i < idx.size(); ++i) x(i, idx[i]) = 1;
  return x;
}

bool is_rref(const FqMatrix& r, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (i && pivots[i] <= pivots[i - 1]) return false;
    for (std::size_t j = 0; j < pivots[i]; ++j)
      if (r(i, j) != 0) return false;
    for (std::size_t k = 0; k < r.rows(); ++k)
      if (r(k, pivots[i]) != (k == i ? 1u : 0u)) return false;
  }
  for (std::size_t i = pivots.size(); i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rank examples") {
  auto f2 = Field::of_order(2);
  CHECK(rank(FqMatrix(f2, 3, 4)) == 0);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(rank(FqMatrix::identity(f2, n)) == n);
  CHECK(rank(mat(f2, 3, 3, {1, 1, 0, 0, 1, 1, 1, 0, 1})) == 2);
}

TEST_CASE("rank agrees with a naive prime-field elimination, including the GF(2) fast path") {
  std::mt19937 rng(11);
  for (unsigned p : {2u, 3u, 5u}) {
    auto f = Field::of_order(p);
    std::vector<Elem> scratch;
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      auto x = oracle::random_matrix(rng, f, r, c);
      std::vector<std::vector<int>> a(r, std::vector<int>(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) a[i][j] = static_cast<int>(x(i, j));
      auto expected = oracle::rank_mod(a, static_cast<int>(p));
      CHECK(rank(x) == expected);
      CHECK(rank_of(*f, x.entries(), r, c, scratch) == expected);
    }
  }
}

TEST_CASE("rank(X) = rank(X^T) and rank(AXB) = rank(X) for invertible A, B") {
  std::mt19937 rng(5);
  for (unsigned q : {2u, 3u, 4u}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 100; ++trial) {
      std::size_t n = 2 + rng() % 4, m = 2 + rng() % 4;
      auto x = oracle::random_matrix(rng, f, n, m);
      if (trial % 3 == 0) x = oracle::random_matrix(rng, f, n, 1) * oracle::random_matrix(rng, f, 1, m);
      auto a = oracle::random_invertible(rng, f, n);
      auto b = oracle::random_invertible(rng, f, m);
      CHECK(rank(x) == rank(transpose(x)));
      CHECK(rank(a * x * b) == rank(x));
    }
  }
}

TEST_CASE("rref examples") {
  auto f2 = Field::of_order(2);
  auto r = rref(mat(f2, 2, 2, {0, 1, 1, 1}));
  CHECK(r.reduced == FqMatrix::identity(f2, 2));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});

  std::mt19937 rng(3);
  auto f3 = Field::of_order(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = oracle::random_matrix(rng, f3, 4, 4);
    auto res = rref(x);
    CHECK(res.transform * x == res.reduced);
    CHECK(is_invertible(res.transform));
    CHECK(is_rref(res.reduced, res.pivots));
    auto again = rref(res.reduced);
    CHECK(again.reduced == res.reduced);
    CHECK(again.pivots == res.pivots);
  }
}

TEST_CASE("kernel examples") {
  auto f2 = Field::of_order(2);
  CHECK(kernel(FqMatrix(f2, 2, 3)) == Subspace::full(f2, 3));
  CHECK(kernel(FqMatrix::identity(f2, 4)) == Subspace::zero(f2, 4));
  auto x = mat(f2, 1, 3, {1, 1, 1});
  auto k = kernel(x);
  CHECK(k.dim() == 2);
  CHECK((x * transpose(k.basis())).is_zero());
}

TEST_CASE("kernel dimension is m - rank and annihilates X") {
  std::mt19937 rng(17);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      auto x = oracle::random_matrix(rng, f, 1 + rng() % 4, 1 + rng() % 5);
      auto k = kernel(x);
      CHECK(k.dim() == x.cols() - rank(x));
      if (k.dim()) CHECK((x * transpose(k.basis())).is_zero());
    }
  }
}

TEST_CASE("support examples") {
  auto f2 = Field::of_order(2);
  CHECK(support(FqMatrix(f2, 3, 4)) == Subspace::zero(f2, 3));
  CHECK(support(hstack(FqMatrix::identity(f2, 3), FqMatrix(f2, 3, 2))) == Subspace::full(f2, 3));
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = oracle::random_matrix(rng, f2, 3, 4);
    auto g = oracle::random_invertible(rng, f2, 4);
    CHECK(support(x) == support(x * g));
    CHECK(support(x).dim() == rank(x));
    std::vector<Elem> flat(x.entries().begin(), x.entries().end());
    oracle::Word w(flat.begin(), flat.end());
    CHECK(oracle::vector_set(support(x), 2) == oracle::column_space(w, 3, 4, 2));
  }
}

TEST_CASE("contains examples") {
  auto f2 = Field::of_order(2);
  auto u = Subspace::span(unit_rows(f2, 4, {0, 1}));
  CHECK(contains(u, Subspace::zero(f2, 4)));
  CHECK(contains(u, u));
  CHECK(contains(u, Subspace::span(mat(f2, 1, 4, {1, 1, 0, 0}))));
  CHECK_FALSE(contains(u, Subspace::span(unit_rows(f2, 4, {2}))));
  CHECK_THROWS_AS(contains(u, Subspace::zero(f2, 3)), std::invalid_argument);
}

TEST_CASE("orthogonal complement examples") {
  auto f2 = Field::of_order(2);
  CHECK(orthogonal_complement(Subspace::full(f2, 4)) == Subspace::zero(f2, 4));
  CHECK(orthogonal_complement(Subspace::span(unit_rows(f2, 4, {0, 1}))) == Subspace::span(unit_rows(f2, 4, {2, 3})));
  for (const auto& s : enumerate_subspaces(f2, 4, 2)) CHECK(orthogonal_complement(orthogonal_complement(s)) == s);
}

TEST_CASE("dim U + dim U^perp = n and U^perp is orthogonal to U") {
  for (unsigned q : {2u, 3u}) {
    auto f = Field::of_order(q);
    for (std::size_t n = 1; n <= 5; ++n)
      for (std::size_t t = 0; t <= n; ++t)
        for (const auto& s : enumerate_subspaces(f, n, t)) {
          auto c = orthogonal_complement(s);
          CHECK(s.dim() + c.dim() == n);
          if (s.dim() && c.dim()) CHECK((s.basis() * transpose(c.basis())).is_zero());
        }
  }
}

TEST_CASE("two bases of one subspace give the same canonical form") {
  std::mt19937 rng(29);
  for (unsigned q : {2u, 3u, 4u}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t n = 3 + rng() % 3, u = 1 + rng() % n;
      auto b = oracle::random_matrix(rng, f, u, n);
      auto g = oracle::random_invertible(rng, f, u);
      auto s1 = Subspace::span(b), s2 = Subspace::span(g * b);
      auto s3 = Subspace::span(vstack(b, oracle::random_matrix(rng, f, 1, u) * b));
      CHECK(s1 == s2);
      CHECK(s1 == s3);
      CHECK(std::hash<Subspace>{}(s1) == std::hash<Subspace>{}(s2));
      CHECK(is_rref(s1.basis(), s1.pivots()));
    }
  }
}

TEST_CASE("basis change: identity short-circuit") {
  auto f2 = Field::of_order(2);
  auto e = Subspace::coordinate(f2, 4, 0, 2);
  CHECK(basis_change_matrix(e, e) == FqMatrix::identity(f2, 4));
}

TEST_CASE("basis change maps every 1-subspace of F_2^3 onto <e_1>") {
  auto f2 = Field::of_order(2);
  auto target = Subspace::coordinate(f2, 3, 0, 1);
  auto lines = enumerate_subspaces(f2, 3, 1);
  CHECK(lines.size() == 7);
  for (const auto& t : lines) {
    auto a = basis_change_matrix(t, target);
    CHECK(is_invertible(a));
    CHECK(Subspace::span(transpose(a * transpose(t.basis()))) == target);
  }
}

TEST_CASE("basis change is invertible on random subspaces of F_3^4") {
  std::mt19937 rng(31);
  auto f3 = Field::of_order(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t t = 1 + rng() % 3;
    auto s = Subspace::span(oracle::random_matrix(rng, f3, t, 4));
    auto target = Subspace::coordinate(f3, 4, 0, s.dim());
    auto a = basis_change_matrix(s, target);
    CHECK(rank(a) == 4);
    if (s.dim()) CHECK(Subspace::span(transpose(a * transpose(s.basis()))) == target);
  }
  CHECK_THROWS_AS(basis_change_matrix(Subspace::coordinate(f3, 4, 0, 1), Subspace::coordinate(f3, 4, 0, 2)),
                  std::invalid_argument);
}

TEST_CASE("inverse and singular matrices") {
  std::mt19937 rng(37);
  auto f = Field::of_order(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = oracle::random_invertible(rng, f, 4);
    CHECK(a * inverse(a) == FqMatrix::identity(f, 4));
  }
  CHECK_THROWS(inverse(FqMatrix(f, 2, 2)));
}

TEST_CASE("span sum and intersection obey the dimension formula") {
  std::mt19937 rng(41);
  auto f = Field::of_order(2);
  for (int trial = 0; trial < 50; ++trial) {
    auto u = Subspace::span(oracle::random_matrix(rng, f, 2, 5));
    auto v = Subspace::span(oracle::random_matrix(rng, f, 3, 5));
    auto su = oracle::vector_set(u, 2), sv = oracle::vector_set(v, 2);
    std::size_t common = 0;
    for (auto x : su) common += sv.count(x);
    std::size_t idim = 0;
    while ((std::size_t{1} << idim) < common) ++idim;
    CHECK(intersection_dim(u, v) == idim);
    CHECK(span_sum(u, v).dim() + intersection_dim(u, v) == u.dim() + v.dim());
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankdesigns/gf.hpp"

using namespace rankdesigns;

namespace {

// Schoolbook multiplication of encoded polynomials mod `modulus` over F_p.
Elem poly_mul_mod(Elem a, Elem b, unsigned p, const std::vector<Elem>& modulus) {
  const std::size_t e = modulus.size() - 1;
  std::vector<int> x(e), y(e), prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i, a /= p, b /= p) {
    x[i] = static_cast<int>(a % p);
    y[i] = static_cast<int>(b % p);
  }
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % static_cast<int>(p);
  for (std::size_t d = 2 * e - 1; d >= e; --d) {
    int c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i)
      prod[d - e + i] = ((prod[d - e + i] - c * static_cast<int>(modulus[i])) % static_cast<int>(p) + static_cast<int>(p)) %
                        static_cast<int>(p);
  }
  Elem out = 0;
  for (std::size_t i = e; i-- > 0;) out = out * p + static_cast<Elem>(prod[i]);
  return out;
}

const std::vector<std::uint64_t> small_orders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

}  // namespace

TEST_CASE("adding zero is the identity") {
  for (auto q : small_orders) {
    auto f = Field::of_order(q);
    for (Elem x = 0; x < q; ++x) CHECK(f->add(x, 0) == x);
  }
}

TEST_CASE("F_4 with modulus t^2+t+1: omega * omega = omega + 1") {
  auto f = Field::make(2, 2, {1, 1, 1});
  const Elem omega = 2;  // the class of t
  CHECK(f->mul(omega, omega) == 3);
  CHECK(f->add(omega, 1) == 3);
}

TEST_CASE("every nonzero element of F_8 times its inverse is 1") {
  auto f = Field::of_order(8);
  for (Elem a = 1; a < 8; ++a) CHECK(f->mul(a, f->inv(a)) == 1);
  CHECK_THROWS(f->inv(0));
}

TEST_CASE("field axioms hold exhaustively for q <= 16") {
  for (auto q : small_orders) {
    auto f = Field::of_order(q);
    CAPTURE(q);
    bool ok = true;
    for (Elem a = 0; a < q && ok; ++a) {
      ok = ok && f->add(a, f->neg(a)) == 0 && f->mul(a, 1) == a;
      if (a) ok = ok && f->mul(a, f->inv(a)) == 1;
      for (Elem b = 0; b < q && ok; ++b) {
        ok = ok && f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
        for (Elem c = 0; c < q && ok; ++c) {
          ok = ok && f->add(f->add(a, b), c) == f->add(a, f->add(b, c));
          ok = ok && f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c));
          ok = ok && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("table multiplication agrees with polynomial multiplication mod the modulus") {
  for (auto q : std::vector<std::uint64_t>{4, 8, 9, 16, 25, 27}) {
    auto f = Field::of_order(q);
    CAPTURE(q);
    bool ok = true;
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b)
        ok = ok && f->mul(a, b) == poly_mul_mod(a, b, f->characteristic(), f->modulus());
    CHECK(ok);
  }
}

TEST_CASE("moduli are checked for irreducibility") {
  CHECK_THROWS_AS(Field::make(2, 2, {1, 0, 1}), std::invalid_argument);  // (t+1)^2
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_NOTHROW(Field::make(2, 3, {1, 0, 1, 1}));
  CHECK(is_irreducible_prime(3, std::vector<Elem>{1, 0, 1}));
  CHECK_FALSE(is_irreducible_prime(5, std::vector<Elem>{1, 0, 1}));  // t^2+1 = (t-2)(t-3) mod 5
}

TEST_CASE("operands from different fields are rejected") {
  auto f4 = Field::of_order(4);
  auto f8 = Field::of_order(8);
  FqElem a(f4, 1), b(f8, 1);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  FqElem c(Field::of_order(4), 3);
  CHECK((a + c).value() == 2);
}

TEST_CASE("trace on F_4 / F_2") {
  auto ext = ExtField::make(Field::of_order(2), 2, {1, 1, 1});
  const Elem omega = 2;
  CHECK(trace(*ext, 0) == 0);
  CHECK(trace(*ext, omega) == 1);
  CHECK(trace(*ext, 1) == 0);
}

TEST_CASE("trace is F_q-linear, lands in the base field and equals the sum of conjugates") {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 3}, {4, 2}, {2, 5}}) {
    auto ext = ExtField::make(Field::of_order(q), m);
    const auto& f = ext->base();
    CAPTURE(q);
    CAPTURE(m);
    bool ok = true;
    for (Elem x = 0; x < ext->size(); ++x) {
      Elem tx = trace(*ext, x);
      Elem sum = 0, conj = x;
      for (unsigned i = 0; i < m; ++i) {
        sum = ext->add(sum, conj);
        Elem next = 1;
        for (unsigned j = 0; j < q; ++j) next = ext->mul(next, conj);
        conj = next;
      }
      ok = ok && ext->in_base(tx) && tx == sum;
      for (Elem c = 0; c < q; ++c)
        ok = ok && trace(*ext, ext->mul(c, x)) == f.mul(c, tx);
    }
    for (Elem x = 0; x < ext->size(); x += 3)
      for (Elem y = 0; y < ext->size(); y += 5)
        ok = ok && trace(*ext, ext->add(x, y)) == f.add(trace(*ext, x), trace(*ext, y));
    CHECK(ok);
  }
}

TEST_CASE("Frobenius is F_q-linear and fixes exactly the base field") {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 8}, {3, 2}, {3, 5}, {4, 2}, {4, 4}, {5, 3}, {16, 2}}) {
    auto ext = ExtField::make(Field::of_order(q), m);
    CAPTURE(q);
    CAPTURE(m);
    bool ok = true;
    std::size_t fixed = 0;
    for (Elem x = 0; x < ext->size(); ++x) {
      Elem fx = ext->frobenius(x);
      ok = ok && fx == ext->pow(x, q);
      if (fx == x) {
        ++fixed;
        ok = ok && ext->in_base(x);
      }
      for (Elem c = 0; c < q; ++c) ok = ok && ext->frobenius(ext->mul(c, x)) == ext->mul(c, fx);
    }
    for (Elem x = 0; x < ext->size(); x += 7)
      for (Elem y = 0; y < ext->size(); y += 11)
        ok = ok && ext->frobenius(ext->add(x, y)) == ext->add(ext->frobenius(x), ext->frobenius(y));
    CHECK(ok);
    CHECK(fixed == q);
  }
}

TEST_CASE("trace-dual basis of (1, omega) in F_4") {
  auto ext = ExtField::make(Field::of_order(2), 2, {1, 1, 1});
  std::vector<Elem> gamma{1, 2};
  auto dual = trace_dual_basis(*ext, gamma);
  REQUIRE(dual.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(trace(*ext, ext->mul(gamma[i], dual[j])) == (i == j ? 1u : 0u));
  // By hand: Gram = [[0,1],[1,1]], whose inverse gives (omega + 1, 1).
  CHECK(dual == std::vector<Elem>{3, 1});
}

TEST_CASE("trace-dual bases pair to the identity and are an involution") {
  for (auto [q, m] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 4}, {3, 3}, {4, 2}, {5, 2}}) {
    auto ext = ExtField::make(Field::of_order(q), m);
    std::vector<Elem> gamma = polynomial_basis(*ext);
    // A second basis: gamma_i -> gamma_i * (1 + y).
    std::vector<Elem> shifted;
    for (Elem g : gamma) shifted.push_back(ext->mul(g, ext->add(1, q)));
    for (const auto& basis : {gamma, shifted}) {
      auto dual = trace_dual_basis(*ext, basis);
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) CHECK(trace(*ext, ext->mul(basis[i], dual[j])) == (i == j ? 1u : 0u));
      CHECK(trace_dual_basis(*ext, dual) == basis);
    }
  }
}

TEST_CASE("a self-dual basis is its own trace dual") {
  auto ext = ExtField::make(Field::of_order(2), 3);
  std::vector<Elem> found;
  for (Elem a = 1; a < 8 && found.empty(); ++a)
    for (Elem b = a + 1; b < 8 && found.empty(); ++b)
      for (Elem c = b + 1; c < 8 && found.empty(); ++c) {
        std::vector<Elem> v{a, b, c};
        bool self = true;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) self = self && trace(*ext, ext->mul(v[i], v[j])) == (i == j ? 1u : 0u);
        if (self) found = v;
      }
  REQUIRE(found.size() == 3);
  CHECK(trace_dual_basis(*ext, found) == found);
}

TEST_CASE("a dependent family has no trace dual") {
  auto ext = ExtField::make(Field::of_order(2), 3);
  std::vector<Elem> bad{1, 2, 3};  // 3 = 1 + y
  CHECK_THROWS_AS(trace_dual_basis(*ext, bad), std::invalid_argument);
}

TEST_CASE("extension elements keep base encodings and round-trip coordinates") {
  auto ext = ExtField::make(Field::of_order(3), 3);
  for (Elem x = 0; x < ext->size(); ++x) CHECK(ext->from_coordinates(ext->coordinates(x)) == x);
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) CHECK(ext->mul(a, b) == ext->base().mul(a, b));
}

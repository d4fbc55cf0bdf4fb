#include "rankdesigns/gf.hpp"

#include <map>
#include <string>
#include <utility>

#include "rankdesigns/linalg.hpp"

namespace rankdesigns {
namespace {

constexpr std::uint64_t kMaxBaseOrder = 1u << 16;
constexpr std::uint64_t kMaxExtOrder = 1u << 20;
constexpr std::uint64_t kTableLimit = 1u << 16;

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Arithmetic of F_p, the coefficient ring of a Field's modulus.
struct PrimeArith {
  unsigned p;
  Elem size() const { return p; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    // p is small; Fermat's little theorem.
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<Elem>(r);
  }
};

using Poly = std::vector<Elem>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo a monic b.
template <typename B>
Poly poly_rem(Poly a, const Poly& b, const B& base) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    Elem lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = base.sub(a[shift + i], base.mul(lead, b[i]));
    trim(a);
  }
  return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
template <typename B>
bool irreducible_over(const B& base, std::span<const Elem> poly_in) {
  Poly poly(poly_in.begin(), poly_in.end());
  trim(poly);
  if (poly.size() < 2) return false;
  if (poly.back() != 1) throw std::invalid_argument("modulus must be monic");
  const std::size_t deg = poly.size() - 1;
  const std::uint64_t q = base.size();
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(q, static_cast<unsigned>(d));
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly div(d + 1);
      std::uint64_t x = v;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<Elem>(x % q);
        x /= q;
      }
      div[d] = 1;
      if (poly_rem(poly, div, base).empty()) return false;
    }
  }
  return true;
}

/// Digits of `a` in base `radix`, `len` of them.
Poly digits(Elem a, Elem radix, std::size_t len) {
  Poly d(len);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = a % radix;
    a /= radix;
  }
  return d;
}

Elem undigits(const Poly& d, Elem radix) {
  Elem v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * radix + d[i];
  return v;
}

/// (a * b) mod modulus, on digit vectors of length deg.
template <typename B>
Poly mul_mod(const Poly& a, const Poly& b, const Poly& modulus, const B& base) {
  const std::size_t deg = modulus.size() - 1;
  Poly prod(2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (b[j] != 0) prod[i + j] = base.add(prod[i + j], base.mul(a[i], b[j]));
  }
  Poly r = poly_rem(std::move(prod), modulus, base);
  r.resize(deg, 0);
  return r;
}

/// Builds log/antilog tables for a cyclic group of order size-1 given a
/// multiplication on encodings; returns false if no generator exists (bug).
template <typename Mul>
void build_log_tables(Elem size, Mul mul, std::vector<std::uint32_t>& log, std::vector<Elem>& exp) {
  const std::uint64_t order = size - 1;
  auto pw = [&](Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  };
  Elem gen = 1;
  if (order > 1) {
    auto factors = prime_factors(order);
    gen = 0;
    for (Elem g = 2; g < size && gen == 0; ++g) {
      bool ok = true;
      for (auto r : factors)
        if (pw(g, order / r) == 1) {
          ok = false;
          break;
        }
      if (ok) gen = g;
    }
    if (gen == 0) throw std::logic_error("no multiplicative generator; modulus is not irreducible");
  }
  log.assign(size, 0);
  exp.assign(order, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp[i] = x;
    log[x] = static_cast<std::uint32_t>(i);
    x = mul(x, gen);
  }
}

/// Conway polynomials for small (p, n), constant term first.
const std::map<std::pair<unsigned, unsigned>, Poly>& conway_table() {
  static const std::map<std::pair<unsigned, unsigned>, Poly> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

/// Lexicographically first monic irreducible of the given degree over base.
template <typename B>
Poly first_irreducible(const B& base, unsigned degree) {
  const std::uint64_t q = base.size();
  const std::uint64_t count = ipow(q, degree);
  for (std::uint64_t v = 0; v < count; ++v) {
    Poly cand(degree + 1);
    std::uint64_t x = v;
    for (unsigned i = 0; i < degree; ++i) {
      cand[i] = static_cast<Elem>(x % q);
      x /= q;
    }
    cand[degree] = 1;
    if (irreducible_over(base, cand)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

bool is_irreducible_prime(unsigned p, std::span<const Elem> poly) {
  return irreducible_over(PrimeArith{p}, poly);
}

bool is_irreducible(const Field& base, std::span<const Elem> poly) {
  return irreducible_over(base, poly);
}

// ---------------------------------------------------------------- Field

std::shared_ptr<const Field> Field::make(unsigned p, unsigned e, std::vector<Elem> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("extension degree must be at least 1");
  if (ipow(p, e) > kMaxBaseOrder) throw std::invalid_argument("field order exceeds 2^16");
  if (modulus.empty()) {
    auto it = conway_table().find({p, e});
    if (it != conway_table().end()) {
      modulus = it->second;
    } else if (e == 1) {
      modulus = {0, 1};  // arithmetic on F_p does not consult the modulus
    } else {
      modulus = first_irreducible(PrimeArith{p}, e);
    }
  }
  return std::shared_ptr<const Field>(new Field(p, e, std::move(modulus)));
}

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("field order must be a prime power >= 2");
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned e = 0;
  std::uint64_t x = q;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  if (x != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return make(p, e);
}

Field::Field(unsigned p, unsigned e, std::vector<Elem> modulus)
    : p_(p), e_(e), q_(static_cast<Elem>(ipow(p, e))), modulus_(std::move(modulus)) {
  if (modulus_.size() != e_ + 1) throw std::invalid_argument("modulus degree must equal e");
  for (Elem c : modulus_)
    if (c >= p_) throw std::invalid_argument("modulus coefficient outside F_p");
  if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
  if (!is_irreducible_prime(p_, modulus_)) throw std::invalid_argument("modulus is not irreducible over F_p");

  PrimeArith fp{p_};
  auto mul_slow = [&](Elem a, Elem b) -> Elem {
    if (e_ == 1) return fp.mul(a, b);
    return undigits(mul_mod(digits(a, p_, e_), digits(b, p_, e_), modulus_, fp), p_);
  };
  build_log_tables(q_, mul_slow, log_, exp_);

  neg_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Poly d = digits(a, p_, e_);
    for (auto& c : d) c = fp.neg(c);
    neg_table_[a] = undigits(d, p_);
  }
  if (p_ != 2 && e_ > 1 && q_ <= 256) {
    add_table_.resize(std::size_t{q_} * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(a, b);
  }
}

Elem Field::add_digits(Elem a, Elem b) const {
  Elem out = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  if (a == 1) return 1;
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} * (k % (q_ - 1))) % (q_ - 1)];
}

// ------------------------------------------------------------- ExtField

std::shared_ptr<const ExtField> ExtField::make(std::shared_ptr<const Field> base, unsigned m,
                                               std::vector<Elem> modulus) {
  if (!base) throw std::invalid_argument("extension needs a base field");
  if (m < 2) throw std::invalid_argument("extension degree m must be at least 2");
  if (ipow(base->size(), m) > kMaxExtOrder) throw std::invalid_argument("extension order exceeds 2^20");
  if (modulus.empty()) {
    auto it = base->degree() == 1 ? conway_table().find({base->characteristic(), m}) : conway_table().end();
    modulus = it != conway_table().end() ? it->second : first_irreducible(*base, m);
  }
  return std::shared_ptr<const ExtField>(new ExtField(std::move(base), m, std::move(modulus)));
}

ExtField::ExtField(std::shared_ptr<const Field> base, unsigned m, std::vector<Elem> modulus)
    : base_(std::move(base)), m_(m), size_(static_cast<Elem>(ipow(base_->size(), m))),
      modulus_(std::move(modulus)) {
  if (modulus_.size() != m_ + 1) throw std::invalid_argument("extension modulus degree must equal m");
  for (Elem c : modulus_)
    if (!base_->contains(c)) throw std::invalid_argument("extension modulus coefficient outside F_q");
  if (modulus_.back() != 1) throw std::invalid_argument("extension modulus must be monic");
  if (!is_irreducible(*base_, modulus_))
    throw std::invalid_argument("extension modulus is not irreducible over the base field");
  if (size_ <= kTableLimit) {
    build_log_tables(size_, [this](Elem a, Elem b) { return mul_poly(a, b); }, log_, exp_);
    tabulated_ = true;
  }
}

Elem ExtField::mul_poly(Elem a, Elem b) const {
  const Elem q = base_->size();
  return undigits(mul_mod(digits(a, q, m_), digits(b, q, m_), modulus_, *base_), q);
}

Elem ExtField::add(Elem a, Elem b) const {
  if (base_->characteristic() == 2) return a ^ b;
  const Elem q = base_->size();
  Elem out = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += base_->add(a % q, b % q) * place;
    a /= q;
    b /= q;
    place *= q;
  }
  return out;
}

Elem ExtField::neg(Elem a) const {
  if (base_->characteristic() == 2) return a;
  const Elem q = base_->size();
  Elem out = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += base_->neg(a % q) * place;
    a /= q;
    place *= q;
  }
  return out;
}

Elem ExtField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!tabulated_) return mul_poly(a, b);
  std::uint32_t s = log_[a] + log_[b];
  if (s >= size_ - 1) s -= size_ - 1;
  return exp_[s];
}

Elem ExtField::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  if (tabulated_) return exp_[(std::uint64_t{log_[a]} * (k % (size_ - 1))) % (size_ - 1)];
  Elem r = 1;
  k %= size_ - 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem ExtField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  return pow(a, size_ - 2);
}

Elem ExtField::frobenius(Elem a, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) a = pow(a, base_->size());
  return a;
}

std::vector<Elem> ExtField::coordinates(Elem a) const { return digits(a, base_->size(), m_); }

Elem ExtField::from_coordinates(std::span<const Elem> c) const {
  if (c.size() != m_) throw std::invalid_argument("coordinate vector must have length m");
  return undigits(Poly(c.begin(), c.end()), base_->size());
}

// ---------------------------------------------------------------- trace

Elem trace(const ExtField& ext, Elem x) {
  if (!ext.contains(x)) throw std::out_of_range("trace argument outside the extension field");
  Elem acc = 0;
  Elem y = x;
  for (unsigned i = 0; i < ext.degree(); ++i) {
    acc = ext.add(acc, y);
    y = ext.frobenius(y);
  }
  if (!ext.in_base(acc)) throw std::logic_error("trace left the base field");
  return acc;
}

std::vector<Elem> polynomial_basis(const ExtField& ext) {
  std::vector<Elem> b(ext.degree());
  Elem place = 1;
  for (auto& v : b) {
    v = place;
    place *= ext.base().size();
  }
  return b;
}

std::vector<Elem> trace_dual_basis(const ExtField& ext, std::span<const Elem> basis) {
  const std::size_t m = ext.degree();
  if (basis.size() != m) throw std::invalid_argument("a basis of F_{q^m} over F_q has exactly m elements");
  FqMatrix gram(ext.base_ptr(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = trace(ext, ext.mul(basis[i], basis[j]));
  FqMatrix ginv;
  try {
    ginv = inverse(gram);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a basis: the trace Gram matrix is singular");
  }
  std::vector<Elem> dual(m, 0);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k)
      dual[j] = ext.add(dual[j], ext.mul(ginv(k, j), basis[k]));
  return dual;
}

}  // namespace rankdesigns

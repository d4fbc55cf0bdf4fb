#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace rankdesigns {

/// Canonical integer encoding of a field element: base-p (resp. base-q)
/// digit packing of the polynomial-basis coefficient vector.
using Elem = std::uint32_t;

/// The prime-power field F_q, q = p^e, realised as F_p[x]/(modulus).
///
/// Contexts are immutable and shared through std::shared_ptr<const Field>.
/// Multiplication goes through log/antilog tables; addition is XOR for
/// p = 2, a table for small odd q, and digit-wise otherwise.
class Field {
 public:
  /// Builds F_{p^e}. An empty `modulus` selects the built-in table entry (or
  /// the lexicographically first primitive polynomial when none is listed).
  /// The modulus is listed from the constant term upward and must be monic.
  static std::shared_ptr<const Field> make(unsigned p, unsigned e = 1,
                                           std::vector<Elem> modulus = {});

  /// F_q for a prime power q, with the default modulus.
  static std::shared_ptr<const Field> of_order(std::uint64_t q);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  Elem size() const { return q_; }
  const std::vector<Elem>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_table_.empty()) return add_table_[a * q_ + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  /// A fixed generator of the multiplicative group.
  Elem primitive() const { return exp_.size() > 1 ? exp_[1] : 1; }

  bool contains(Elem a) const { return a < q_; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(unsigned p, unsigned e, std::vector<Elem> modulus);
  Elem add_digits(Elem a, Elem b) const;

  unsigned p_;
  unsigned e_;
  Elem q_;
  std::vector<Elem> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<Elem> neg_table_;
  std::vector<Elem> add_table_;
};

/// The extension F_{q^m} = F_q[y]/(modulus) over a base field F_q.
///
/// Elements are encoded base q: value = sum_i c_i q^i, so base-field
/// elements keep their encoding when embedded as constants.
class ExtField {
 public:
  static std::shared_ptr<const ExtField> make(std::shared_ptr<const Field> base,
                                              unsigned m,
                                              std::vector<Elem> modulus = {});

  const Field& base() const { return *base_; }
  const std::shared_ptr<const Field>& base_ptr() const { return base_; }
  unsigned degree() const { return m_; }
  Elem size() const { return size_; }
  const std::vector<Elem>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  /// x -> x^q, the generator of Gal(F_{q^m}/F_q).
  Elem frobenius(Elem a, unsigned times = 1) const;

  /// Coordinates with respect to the polynomial basis 1, y, ..., y^{m-1}.
  std::vector<Elem> coordinates(Elem a) const;
  Elem from_coordinates(std::span<const Elem> c) const;

  bool contains(Elem a) const { return a < size_; }
  bool in_base(Elem a) const { return a < base_->size(); }

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.m_ == b.m_ && *a.base_ == *b.base_ && a.modulus_ == b.modulus_;
  }

 private:
  ExtField(std::shared_ptr<const Field> base, unsigned m, std::vector<Elem> modulus);
  Elem mul_poly(Elem a, Elem b) const;

  std::shared_ptr<const Field> base_;
  unsigned m_;
  Elem size_;
  std::vector<Elem> modulus_;
  bool tabulated_ = false;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

/// Tr(x) = sum_{i<m} x^{q^i}; the result is a base-field element.
Elem trace(const ExtField& ext, Elem x);

/// The basis (1, y, ..., y^{m-1}) of F_{q^m} over F_q.
std::vector<Elem> polynomial_basis(const ExtField& ext);

/// Returns the trace-dual basis: Tr(gamma_i * dual_j) = delta_ij.
/// Throws std::invalid_argument if `basis` is not an F_q-basis.
std::vector<Elem> trace_dual_basis(const ExtField& ext, std::span<const Elem> basis);

/// True iff the monic polynomial (constant term first) is irreducible over F.
bool is_irreducible(const Field& base, std::span<const Elem> poly);
/// Irreducibility over the prime field F_p.
bool is_irreducible_prime(unsigned p, std::span<const Elem> poly);

/// Field-tagged element for ergonomic arithmetic with mixed-field checks.
template <typename F>
class Element {
 public:
  Element(std::shared_ptr<const F> field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_->contains(value_)) throw std::out_of_range("element encoding outside the field");
  }

  Elem value() const { return value_; }
  const std::shared_ptr<const F>& field() const { return field_; }

  friend Element operator+(const Element& a, const Element& b) {
    check_same(a, b);
    return {a.field_, a.field_->add(a.value_, b.value_)};
  }
  friend Element operator-(const Element& a, const Element& b) {
    check_same(a, b);
    return {a.field_, a.field_->sub(a.value_, b.value_)};
  }
  friend Element operator*(const Element& a, const Element& b) {
    check_same(a, b);
    return {a.field_, a.field_->mul(a.value_, b.value_)};
  }
  Element operator-() const { return {field_, field_->neg(value_)}; }
  Element inverse() const { return {field_, field_->inv(value_)}; }

  friend bool operator==(const Element& a, const Element& b) {
    check_same(a, b);
    return a.value_ == b.value_;
  }

 private:
  static void check_same(const Element& a, const Element& b) {
    if (a.field_ != b.field_ && !(*a.field_ == *b.field_))
      throw std::invalid_argument("operands belong to different fields");
  }

  std::shared_ptr<const F> field_;
  Elem value_;
};

using FqElem = Element<Field>;
using ExtElem = Element<ExtField>;

}  // namespace rankdesigns

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "rankdesigns/gf.hpp"

namespace rankdesigns {

/// Dense row-major matrix with entries in the field F (Field or ExtField).
template <typename F>
class Matrix {
 public:
  using field_type = F;

  Matrix() = default;
  Matrix(std::shared_ptr<const F> field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::shared_ptr<const F> field, std::size_t rows, std::size_t cols,
         std::vector<Elem> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("matrix entry count does not match its shape");
    for (Elem v : data_)
      if (!field_->contains(v)) throw std::invalid_argument("matrix entry outside the field");
  }

  static Matrix identity(std::shared_ptr<const F> field, std::size_t n) {
    Matrix id(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return id;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> entries() const { return data_; }

  const F& field() const { return *field_; }
  const std::shared_ptr<const F>& field_ptr() const { return field_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem v) { return v == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
           (a.field_ == b.field_ || (a.field_ && b.field_ && *a.field_ == *b.field_));
  }

 private:
  std::shared_ptr<const F> field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

using FqMatrix = Matrix<Field>;
using ExtMatrix = Matrix<ExtField>;

namespace detail {

template <typename F>
void require_same_field(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.field_ptr() != b.field_ptr() && !(a.field() == b.field()))
    throw std::invalid_argument("matrices over different fields");
}

/// In-place row reduction of `m` (rows x cols); returns pivot columns.
/// When `track` is non-null the same row operations are applied to it.
template <typename F>
std::vector<std::size_t> gauss_jordan(const F& f, std::vector<Elem>& m, std::size_t rows,
                                      std::size_t cols, std::vector<Elem>* track,
                                      std::size_t track_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(m.begin() + sel * cols, m.begin() + (sel + 1) * cols, m.begin() + r * cols);
      if (track)
        std::swap_ranges(track->begin() + sel * track_cols, track->begin() + (sel + 1) * track_cols,
                         track->begin() + r * track_cols);
    }
    Elem inv = f.inv(m[r * cols + c]);
    if (inv != 1) {
      for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = f.mul(m[r * cols + j], inv);
      if (track)
        for (std::size_t j = 0; j < track_cols; ++j)
          (*track)[r * track_cols + j] = f.mul((*track)[r * track_cols + j], inv);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem factor = m[i * cols + c];
      if (factor == 0) continue;
      Elem nf = f.neg(factor);
      for (std::size_t j = c; j < cols; ++j)
        if (m[r * cols + j] != 0) m[i * cols + j] = f.add(m[i * cols + j], f.mul(nf, m[r * cols + j]));
      if (track)
        for (std::size_t j = 0; j < track_cols; ++j)
          if ((*track)[r * track_cols + j] != 0)
            (*track)[i * track_cols + j] =
                f.add((*track)[i * track_cols + j], f.mul(nf, (*track)[r * track_cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Rank of a GF(2) matrix whose rows are packed into machine words.
std::size_t rank_gf2(std::span<std::uint64_t> rows);

}  // namespace detail

/// Rank of a small row-major matrix over F_q, used by the enumeration loops.
/// `scratch` is reused between calls to avoid allocation.
std::size_t rank_of(const Field& f, std::span<const Elem> entries, std::size_t rows,
                    std::size_t cols, std::vector<Elem>& scratch);

template <typename F>
Matrix<F> transpose(const Matrix<F>& x) {
  Matrix<F> t(x.field_ptr(), x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) t(j, i) = x(i, j);
  return t;
}

template <typename F>
Matrix<F> operator*(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  const F& f = a.field();
  Matrix<F> c(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    }
  return c;
}

template <typename F>
Matrix<F> operator+(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix<F> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
  return c;
}

template <typename F>
Matrix<F> operator-(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix<F> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().sub(a(i, j), b(i, j));
  return c;
}

template <typename F>
Matrix<F> scaled(const Matrix<F>& x, Elem c) {
  Matrix<F> y = x;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) y(i, j) = x.field().mul(c, x(i, j));
  return y;
}

/// Rows [first, first + count) of x.
template <typename F>
Matrix<F> row_block(const Matrix<F>& x, std::size_t first, std::size_t count) {
  if (first + count > x.rows()) throw std::out_of_range("row block outside the matrix");
  std::vector<Elem> e(x.entries().begin() + first * x.cols(),
                      x.entries().begin() + (first + count) * x.cols());
  return Matrix<F>(x.field_ptr(), count, x.cols(), std::move(e));
}

template <typename F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  std::vector<Elem> e(a.entries().begin(), a.entries().end());
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return Matrix<F>(a.field_ptr(), a.rows() + b.rows(), a.cols(), std::move(e));
}

template <typename F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix<F> c(a.field_ptr(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

/// Same entries, read row-major into a new shape.
template <typename F>
Matrix<F> reshape(const Matrix<F>& x, std::size_t rows, std::size_t cols) {
  return Matrix<F>(x.field_ptr(), rows, cols, std::vector<Elem>(x.entries().begin(), x.entries().end()));
}

template <typename F>
struct RrefResult {
  Matrix<F> reduced;                 // R = T * X
  std::vector<std::size_t> pivots;   // pivot columns of R
  Matrix<F> transform;               // invertible T
};

template <typename F>
RrefResult<F> rref(const Matrix<F>& x) {
  std::vector<Elem> m(x.entries().begin(), x.entries().end());
  auto id = Matrix<F>::identity(x.field_ptr(), x.rows());
  std::vector<Elem> t(id.entries().begin(), id.entries().end());
  auto pivots = detail::gauss_jordan(x.field(), m, x.rows(), x.cols(), &t, x.rows());
  return {Matrix<F>(x.field_ptr(), x.rows(), x.cols(), std::move(m)), std::move(pivots),
          Matrix<F>(x.field_ptr(), x.rows(), x.rows(), std::move(t))};
}

template <typename F>
std::size_t rank(const Matrix<F>& x) {
  if constexpr (std::is_same_v<F, Field>) {
    std::vector<Elem> scratch;
    return rank_of(x.field(), x.entries(), x.rows(), x.cols(), scratch);
  } else {
    std::vector<Elem> m(x.entries().begin(), x.entries().end());
    return detail::gauss_jordan(x.field(), m, x.rows(), x.cols(), nullptr, 0).size();
  }
}

/// Nonzero rows of the reduced row echelon form: a canonical row-space basis.
template <typename F>
Matrix<F> row_space_basis(const Matrix<F>& x) {
  std::vector<Elem> m(x.entries().begin(), x.entries().end());
  auto pivots = detail::gauss_jordan(x.field(), m, x.rows(), x.cols(), nullptr, 0);
  m.resize(pivots.size() * x.cols());
  return Matrix<F>(x.field_ptr(), pivots.size(), x.cols(), std::move(m));
}

/// Basis (as rows, in reduced echelon form) of {v : X v^T = 0}.
template <typename F>
Matrix<F> kernel_basis(const Matrix<F>& x) {
  const F& f = x.field();
  const std::size_t n = x.cols();
  std::vector<Elem> m(x.entries().begin(), x.entries().end());
  auto pivots = detail::gauss_jordan(f, m, x.rows(), n, nullptr, 0);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Elem> out;
  std::size_t count = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r * n + free]);
    out.insert(out.end(), v.begin(), v.end());
    ++count;
  }
  return row_space_basis(Matrix<F>(x.field_ptr(), count, n, std::move(out)));
}

/// Inverse of a square matrix; throws std::invalid_argument if singular.
template <typename F>
Matrix<F> inverse(const Matrix<F>& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  auto r = rref(x);
  if (r.pivots.size() != x.rows()) throw std::invalid_argument("matrix is singular");
  return r.transform;
}

template <typename F>
bool is_invertible(const Matrix<F>& x) {
  return x.rows() == x.cols() && rank(x) == x.rows();
}

/// A subspace of F_q^n in canonical form: its basis is the reduced row
/// echelon form of any spanning set, so equal subspaces compare bit-identical.
class Subspace {
 public:
  Subspace() = default;

  /// Row space of `rows`.
  static Subspace span(const FqMatrix& rows);
  static Subspace zero(std::shared_ptr<const Field> field, std::size_t n);
  static Subspace full(std::shared_ptr<const Field> field, std::size_t n);
  /// The coordinate subspace <e_first, ..., e_{first+count-1}> (0-based).
  static Subspace coordinate(std::shared_ptr<const Field> field, std::size_t n, std::size_t first,
                             std::size_t count);

  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const Field& field() const { return basis_.field(); }
  const std::shared_ptr<const Field>& field_ptr() const { return basis_.field_ptr(); }

  bool contains_vector(std::span<const Elem> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient() == b.ambient() && a.basis_ == b.basis_;
  }
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

  std::size_t hash() const;

 private:
  explicit Subspace(FqMatrix rref_basis);

  FqMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : X v^T = 0} as a canonical subspace of F_q^{cols}.
Subspace kernel(const FqMatrix& x);

/// Column space of X, a subspace of F_q^{rows}.
Subspace support(const FqMatrix& x);

/// True iff T is a subspace of U. Throws on ambient mismatch.
bool contains(const Subspace& u, const Subspace& t);

Subspace orthogonal_complement(const Subspace& u);

Subspace span_sum(const Subspace& u, const Subspace& v);

std::size_t intersection_dim(const Subspace& u, const Subspace& v);

/// An invertible A with {A v^T : v in T} = target.
///
/// Both bases are completed to bases of F_q^n greedily with standard
/// vectors, lowest index first, so A is deterministic.
FqMatrix basis_change_matrix(const Subspace& t, const Subspace& target);

}  // namespace rankdesigns

template <>
struct std::hash<rankdesigns::Subspace> {
  std::size_t operator()(const rankdesigns::Subspace& s) const noexcept { return s.hash(); }
};

#include "rankdesigns/linalg.hpp"

#include <bit>

namespace rankdesigns {

namespace detail {

std::size_t rank_gf2(std::span<std::uint64_t> rows) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t v = rows[i];
    if (v == 0) continue;
    std::uint64_t low = v & (~v + 1);
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & low) rows[j] ^= v;
    ++r;
  }
  return r;
}

}  // namespace detail

std::size_t rank_of(const Field& f, std::span<const Elem> entries, std::size_t rows, std::size_t cols,
                    std::vector<Elem>& scratch) {
  if (f.size() == 2 && cols <= 64 && rows <= 64) {
    std::uint64_t packed[64];
    for (std::size_t i = 0; i < rows; ++i) {
      std::uint64_t w = 0;
      for (std::size_t j = 0; j < cols; ++j) w |= std::uint64_t{entries[i * cols + j]} << j;
      packed[i] = w;
    }
    return detail::rank_gf2({packed, rows});
  }
  scratch.assign(entries.begin(), entries.end());
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && scratch[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(scratch[sel * cols + j], scratch[r * cols + j]);
    Elem inv = f.inv(scratch[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      Elem factor = scratch[i * cols + c];
      if (factor == 0) continue;
      Elem nf = f.neg(f.mul(factor, inv));
      for (std::size_t j = c; j < cols; ++j)
        if (scratch[r * cols + j] != 0)
          scratch[i * cols + j] = f.add(scratch[i * cols + j], f.mul(nf, scratch[r * cols + j]));
    }
    ++r;
  }
  return r;
}

// ------------------------------------------------------------- Subspace

Subspace::Subspace(FqMatrix rref_basis) : basis_(std::move(rref_basis)) {
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t c = 0;
    while (basis_(i, c) == 0) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::span(const FqMatrix& rows) { return Subspace(row_space_basis(rows)); }

Subspace Subspace::zero(std::shared_ptr<const Field> field, std::size_t n) {
  return Subspace(FqMatrix(std::move(field), 0, n));
}

Subspace Subspace::full(std::shared_ptr<const Field> field, std::size_t n) {
  return Subspace(FqMatrix::identity(std::move(field), n));
}

Subspace Subspace::coordinate(std::shared_ptr<const Field> field, std::size_t n, std::size_t first,
                              std::size_t count) {
  if (first + count > n) throw std::out_of_range("coordinate subspace outside the ambient space");
  FqMatrix b(std::move(field), count, n);
  for (std::size_t i = 0; i < count; ++i) b(i, first + i) = 1;
  return Subspace(std::move(b));
}

bool Subspace::contains_vector(std::span<const Elem> v) const {
  if (v.size() != ambient()) throw std::invalid_argument("vector length differs from the ambient dimension");
  const Field& f = field();
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Elem c = w[pivots_[i]];
    if (c == 0) continue;
    Elem nc = f.neg(c);
    auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < w.size(); ++j)
      if (row[j] != 0) w[j] = f.add(w[j], f.mul(nc, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  auto ea = a.basis_.entries();
  auto eb = b.basis_.entries();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t Subspace::hash() const {
  std::size_t h = ambient() * 1000003u ^ dim();
  for (Elem v : basis_.entries()) h = h * 1099511628211ull ^ v;
  return h;
}

// --------------------------------------------------------- free functions

Subspace kernel(const FqMatrix& x) { return Subspace::span(kernel_basis(x)); }

Subspace support(const FqMatrix& x) { return Subspace::span(transpose(x)); }

bool contains(const Subspace& u, const Subspace& t) {
  if (u.ambient() != t.ambient()) throw std::invalid_argument("subspaces live in different ambient spaces");
  if (t.dim() > u.dim()) return false;
  for (std::size_t i = 0; i < t.dim(); ++i)
    if (!u.contains_vector(t.basis().row(i))) return false;
  return true;
}

Subspace orthogonal_complement(const Subspace& u) {
  if (u.dim() == 0) return Subspace::full(u.field_ptr(), u.ambient());
  return kernel(u.basis());
}

Subspace span_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("subspaces live in different ambient spaces");
  return Subspace::span(vstack(u.basis(), v.basis()));
}

std::size_t intersection_dim(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - span_sum(u, v).dim();
}

namespace {

/// Rows of `s`'s basis followed by standard vectors, lowest index first,
/// until the rows span F_q^n.
FqMatrix complete_basis(const Subspace& s) {
  const std::size_t n = s.ambient();
  FqMatrix rows = s.basis();
  Subspace current = s;
  for (std::size_t i = 0; i < n && rows.rows() < n; ++i) {
    std::vector<Elem> e(n, 0);
    e[i] = 1;
    if (current.contains_vector(e)) continue;
    FqMatrix ei(s.field_ptr(), 1, n, e);
    rows = vstack(rows, ei);
    current = Subspace::span(rows);
  }
  return rows;
}

}  // namespace

FqMatrix basis_change_matrix(const Subspace& t, const Subspace& target) {
  if (t.ambient() != target.ambient()) throw std::invalid_argument("subspaces live in different ambient spaces");
  if (t.dim() != target.dim()) throw std::invalid_argument("basis change needs subspaces of equal dimension");
  const std::size_t n = t.ambient();
  if (t == target) return FqMatrix::identity(t.field_ptr(), n);
  // Columns of P^T: completed basis of T; columns of Q^T: completed target.
  // A P^T = Q^T sends the i-th basis vector of T to the i-th of target.
  FqMatrix p = complete_basis(t);
  FqMatrix q = complete_basis(target);
  return transpose(q) * inverse(transpose(p));
}

}  // namespace rankdesigns

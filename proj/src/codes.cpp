#include "rankdesigns/codes.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "enumerate.hpp"
#include "rankdesigns/error.hpp"

namespace rankdesigns {

// --------------------------------------------------- WeightDistribution

WeightDistribution::WeightDistribution(std::vector<BigCount> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw std::invalid_argument("a weight distribution has at least W_0");
  for (const auto& c : counts_)
    if (c < 0) throw std::invalid_argument("negative weight count");
}

BigCount WeightDistribution::total() const {
  BigCount s = 0;
  for (const auto& c : counts_) s += c;
  return s;
}

std::vector<int> WeightDistribution::nonzero_weights(int lo, int hi) const {
  std::vector<int> out;
  for (int i = std::max(lo, 0); i <= hi && i < static_cast<int>(counts_.size()); ++i)
    if (counts_[i] != 0) out.push_back(i);
  return out;
}

// ----------------------------------------------------------- MatrixCode

MatrixCode::MatrixCode(std::shared_ptr<const Field> field, std::size_t n, std::size_t m, std::vector<FqMatrix> basis)
    : field_(std::move(field)), n_(n), m_(m), basis_(std::move(basis)) {
  if (n_ == 0 || m_ == 0) throw std::invalid_argument("matrix code needs n, m >= 1");
  for (const auto& b : basis_) {
    if (b.rows() != n_ || b.cols() != m_) throw std::invalid_argument("basis matrix has the wrong shape");
    if (!(b.field() == *field_)) throw std::invalid_argument("basis matrix over a different field");
  }
  if (rank(generator()) != basis_.size()) throw std::invalid_argument("basis matrices are linearly dependent");
}

MatrixCode MatrixCode::span_of(std::shared_ptr<const Field> field, std::size_t n, std::size_t m,
                               const std::vector<FqMatrix>& words) {
  FqMatrix gen(field, words.size(), n * m);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].rows() != n || words[i].cols() != m) throw std::invalid_argument("word has the wrong shape");
    std::copy(words[i].entries().begin(), words[i].entries().end(), gen.row(i).begin());
  }
  FqMatrix red = row_space_basis(gen);
  std::vector<FqMatrix> basis;
  for (std::size_t i = 0; i < red.rows(); ++i)
    basis.push_back(reshape(row_block(red, i, 1), n, m));
  return MatrixCode(std::move(field), n, m, std::move(basis));
}

MatrixCode MatrixCode::zero(std::shared_ptr<const Field> field, std::size_t n, std::size_t m) {
  return MatrixCode(std::move(field), n, m, {});
}

MatrixCode MatrixCode::full(std::shared_ptr<const Field> field, std::size_t n, std::size_t m) {
  std::vector<FqMatrix> basis;
  for (std::size_t i = 0; i < n * m; ++i) {
    FqMatrix e(field, n, m);
    e(i / m, i % m) = 1;
    basis.push_back(std::move(e));
  }
  return MatrixCode(std::move(field), n, m, std::move(basis));
}

FqMatrix MatrixCode::generator() const {
  FqMatrix gen(field_, basis_.size(), n_ * m_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    std::copy(basis_[i].entries().begin(), basis_[i].entries().end(), gen.row(i).begin());
  return gen;
}

FqMatrix MatrixCode::canonical_generator() const { return row_space_basis(generator()); }

FqMatrix MatrixCode::codeword(std::span<const Elem> coefficients) const {
  if (coefficients.size() != basis_.size()) throw std::invalid_argument("coefficient count differs from k");
  FqMatrix x(field_, n_, m_);
  for (std::size_t j = 0; j < basis_.size(); ++j)
    if (coefficients[j] != 0) x = x + scaled(basis_[j], coefficients[j]);
  return x;
}

bool operator==(const MatrixCode& a, const MatrixCode& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && *a.field_ == *b.field_ && a.canonical_generator() == b.canonical_generator();
}

// ----------------------------------------------------------- VectorCode

VectorCode::VectorCode(std::shared_ptr<const ExtField> ext, ExtMatrix generator)
    : ext_(std::move(ext)), generator_(std::move(generator)) {
  if (!(generator_.field() == *ext_)) throw std::invalid_argument("generator over a different field");
  const std::size_t k = generator_.rows(), n = generator_.cols();
  if (k < 1 || k >= n) throw std::invalid_argument("vector code needs 1 <= k < n");
  if (rank(generator_) != k) throw std::invalid_argument("generator rows are linearly dependent");
}

// -------------------------------------------------------- CoordinateMap

CoordinateMap::CoordinateMap(std::shared_ptr<const ExtField> ext, std::vector<Elem> basis)
    : ext_(std::move(ext)), basis_(std::move(basis)) {
  const std::size_t m = ext_->degree();
  if (basis_.size() != m) throw std::invalid_argument("a basis of F_{q^m} over F_q has exactly m elements");
  FqMatrix g(ext_->base_ptr(), m, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (!ext_->contains(basis_[j])) throw std::invalid_argument("basis element outside the extension field");
    auto c = ext_->coordinates(basis_[j]);
    std::copy(c.begin(), c.end(), g.row(j).begin());
  }
  if (rank(g) != m) throw std::invalid_argument("not a basis: elements are F_q-linearly dependent");
  to_basis_ = inverse(g);
}

std::vector<Elem> CoordinateMap::coordinates(Elem a) const {
  const std::size_t m = ext_->degree();
  auto p = ext_->coordinates(a);
  FqMatrix row(ext_->base_ptr(), 1, m, std::move(p));
  auto c = row * to_basis_;
  return {c.entries().begin(), c.entries().end()};
}

FqMatrix CoordinateMap::operator()(std::span<const Elem> x) const {
  const std::size_t m = ext_->degree();
  FqMatrix out(ext_->base_ptr(), x.size(), m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto c = coordinates(x[i]);
    std::copy(c.begin(), c.end(), out.row(i).begin());
  }
  return out;
}

// ------------------------------------------------------ code operations

MatrixCode expand(const VectorCode& c, std::span<const Elem> gamma) {
  const ExtField& ext = c.ext();
  CoordinateMap map(c.ext_ptr(), {gamma.begin(), gamma.end()});
  const std::size_t n = c.length(), m = ext.degree();
  std::vector<FqMatrix> basis;
  std::vector<Elem> x(n);
  for (std::size_t i = 0; i < c.dimension(); ++i)
    for (Elem g : gamma) {
      for (std::size_t j = 0; j < n; ++j) x[j] = ext.mul(g, c.generator()(i, j));
      basis.push_back(map(x));
    }
  return MatrixCode(ext.base_ptr(), n, m, std::move(basis));
}

MatrixCode dual(const MatrixCode& c) {
  // Tr(X Y^T) = sum_ij X_ij Y_ij: the dual is the kernel of the flattened basis.
  FqMatrix ker = kernel_basis(c.generator());
  std::vector<FqMatrix> basis;
  for (std::size_t i = 0; i < ker.rows(); ++i) basis.push_back(reshape(row_block(ker, i, 1), c.rows(), c.cols()));
  return MatrixCode(c.field_ptr(), c.rows(), c.cols(), std::move(basis));
}

VectorCode dual_vector(const VectorCode& c) { return VectorCode(c.ext_ptr(), kernel_basis(c.generator())); }

MatrixCode left_multiply(const FqMatrix& a, const MatrixCode& c) {
  if (a.rows() != c.rows() || !is_invertible(a)) throw std::invalid_argument("A must be an invertible n x n matrix");
  std::vector<FqMatrix> basis;
  for (const auto& b : c.basis()) basis.push_back(a * b);
  return MatrixCode(c.field_ptr(), c.rows(), c.cols(), std::move(basis));
}

MatrixCode transpose_code(const MatrixCode& c) {
  std::vector<FqMatrix> basis;
  for (const auto& b : c.basis()) basis.push_back(transpose(b));
  return MatrixCode(c.field_ptr(), c.cols(), c.rows(), std::move(basis));
}

WeightDistribution weight_distribution(const MatrixCode& c, const EnumerationOptions& opts) {
  struct State {
    std::vector<std::uint64_t> counts;
    std::vector<Elem> scratch;
  };
  const std::size_t n = c.rows(), m = c.cols();
  auto states = detail::enumerate_codewords<State>(c, opts, "weight_distribution",
                                                   [&](State& s, std::span<const Elem> word) {
                                                     if (s.counts.empty()) s.counts.assign(n + 1, 0);
                                                     ++s.counts[rank_of(c.field(), word, n, m, s.scratch)];
                                                   });
  std::vector<BigCount> total(n + 1, 0);
  for (const auto& s : states)
    for (std::size_t i = 0; i < s.counts.size(); ++i) total[i] += static_cast<unsigned long>(s.counts[i]);
  return WeightDistribution(std::move(total));
}

std::size_t min_distance(const WeightDistribution& w, std::size_t n, std::size_t m) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] != 0) return i;
  return std::min(n, m) + 1;
}

std::size_t min_distance(const MatrixCode& c, const EnumerationOptions& opts) {
  return min_distance(weight_distribution(c, opts), c.rows(), c.cols());
}

namespace {

/// q^e as an exact rational (e may be negative).
mpq_class q_power(std::uint64_t q, long e) {
  if (e >= 0) return mpq_class(big_pow(q, static_cast<std::uint64_t>(e)));
  mpq_class v(BigCount(1), big_pow(q, static_cast<std::uint64_t>(-e)));
  v.canonicalize();
  return v;
}

BigCount require_integer(mpq_class v, const char* message) {
  v.canonicalize();
  if (v.get_den() != 1) throw DomainError(message);
  return v.get_num();
}

}  // namespace

WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t m, std::size_t k,
                               std::uint64_t q) {
  if (w.size() != n + 1) throw std::invalid_argument("distribution length must be n + 1");
  if (k > n * m) throw std::invalid_argument("k exceeds n m");
  if (w[0] != 1 || w.total() != big_pow(q, k)) throw DomainError("not a valid code distribution");
  // sum_i W_i(C*) [n-i choose l] = q^{m(n-l)-k} sum_{i<=l} W_i(C) [n-i choose l-i], l = 0..n
  std::vector<BigCount> rhs(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    BigCount s = 0;
    for (std::size_t i = 0; i <= l; ++i) s += w[i] * q_binomial(n - i, l - i, q);
    long e = static_cast<long>(m * (n - l)) - static_cast<long>(k);
    rhs[l] = require_integer(mpq_class(s) * q_power(q, e), "not a valid code distribution");
  }
  std::vector<int> all(n + 1);
  for (std::size_t i = 0; i <= n; ++i) all[i] = static_cast<int>(i);
  try {
    return WeightDistribution(q_pascal_system(all, static_cast<int>(n), q, rhs));
  } catch (const DomainError&) {
    throw DomainError("not a valid code distribution");
  }
}

namespace {

void check_transform(const MatrixCode& c, const FqMatrix& a, std::size_t s) {
  if (a.rows() != c.rows() || a.cols() != c.rows()) throw std::invalid_argument("A must be n x n");
  if (!(a.field() == c.field())) throw std::invalid_argument("A is over a different field");
  if (!is_invertible(a)) throw std::invalid_argument("A is singular");
  if (s < 1 || s >= c.rows()) throw std::invalid_argument("s must satisfy 1 <= s <= n - 1");
}

}  // namespace

MatrixCode puncture(const MatrixCode& c, const FqMatrix& a, std::size_t s) {
  check_transform(c, a, s);
  const std::size_t n = c.rows();
  std::vector<FqMatrix> images;
  for (const auto& b : c.basis()) images.push_back(row_block(a * b, s, n - s));
  return MatrixCode::span_of(c.field_ptr(), n - s, c.cols(), images);
}

MatrixCode shorten(const MatrixCode& c, const FqMatrix& a, std::size_t s) {
  check_transform(c, a, s);
  const std::size_t n = c.rows(), m = c.cols(), k = c.dimension();
  std::vector<FqMatrix> moved;
  for (const auto& b : c.basis()) moved.push_back(a * b);
  // Coefficient vectors v with sum_j v_j (A B_j)_{1..s} = 0.
  FqMatrix top(c.field_ptr(), s * m, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t e = 0; e < s * m; ++e) top(e, j) = moved[j].entries()[e];
  FqMatrix coeffs = kernel_basis(top);
  std::vector<FqMatrix> basis;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    FqMatrix x(c.field_ptr(), n, m);
    for (std::size_t j = 0; j < k; ++j)
      if (coeffs(r, j) != 0) x = x + scaled(moved[j], coeffs(r, j));
    basis.push_back(row_block(x, s, n - s));
  }
  return MatrixCode(c.field_ptr(), n - s, m, std::move(basis));
}

WeightDistribution punctured_wd_from_dual_weights(std::size_t n, std::size_t m, std::size_t k, std::uint64_t q,
                                                  std::size_t t, std::size_t d, std::span<const int> dual_weights) {
  if (t < 1 || t >= n) throw std::invalid_argument("t must satisfy 1 <= t <= n - 1");
  if (t >= d) throw std::invalid_argument("strength must satisfy t < d");
  const std::size_t np = n - t;
  if (k > np * m) throw std::invalid_argument("punctured code cannot have dimension k");
  std::set<int> window;
  for (int i : dual_weights)
    if (i >= 1 && i <= static_cast<int>(np)) window.insert(i);
  const std::vector<int> weights(window.begin(), window.end());
  const std::size_t r = weights.size();
  if (r > d - t)
    throw DomainError("hypothesis violated: " + std::to_string(r) + " dual weights in [1, n - t] exceed d - t = " +
                      std::to_string(d - t));
  // sum_j W_{i_j}(Pi*) [n'-i_j choose l] = (q^{m(n'-l)-k} - 1) [n' choose l], l < r
  std::vector<BigCount> rhs(r);
  for (std::size_t l = 0; l < r; ++l) {
    long e = static_cast<long>(m * (np - l)) - static_cast<long>(k);
    rhs[l] = require_integer((q_power(q, e) - 1) * mpq_class(q_binomial(np, l, q)), "inconsistent weight system");
  }
  auto solution = q_pascal_system(weights, static_cast<int>(np), q, rhs);
  std::vector<BigCount> dual_counts(np + 1, 0);
  dual_counts[0] = 1;
  for (std::size_t j = 0; j < r; ++j) dual_counts[weights[j]] = solution[j];
  return macwilliams(WeightDistribution(std::move(dual_counts)), np, m, np * m - k, q);
}

VectorCode gabidulin(std::shared_ptr<const ExtField> ext, std::size_t n, std::size_t k, std::span<const Elem> points) {
  const std::size_t m = ext->degree();
  if (n > m) throw std::invalid_argument("Gabidulin codes need n <= m");
  if (k < 1 || k >= n) throw std::invalid_argument("Gabidulin codes need 1 <= k < n");
  if (points.size() != n) throw std::invalid_argument("need exactly n evaluation points");
  CoordinateMap coords(ext, polynomial_basis(*ext));
  if (rank(coords(points)) != n) throw std::invalid_argument("evaluation points are F_q-linearly dependent");
  ExtMatrix g(ext, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = ext->frobenius(points[j], static_cast<unsigned>(i));
  return VectorCode(ext, std::move(g));
}

VectorCode frobenius_parity_check_code(std::shared_ptr<const ExtField> ext, std::span<const Elem> points, unsigned s) {
  const std::size_t n = points.size();
  ExtMatrix h(ext, 2, n);
  for (std::size_t j = 0; j < n; ++j) {
    h(0, j) = points[j];
    h(1, j) = ext->frobenius(points[j], s);
  }
  ExtMatrix g = kernel_basis(h);
  if (g.rows() == 0) throw std::invalid_argument("parity-check matrix has full rank n; the code is {0}");
  return VectorCode(ext, std::move(g));
}

MrdCriteria mrd_criteria(const MatrixCode& c, const EnumerationOptions& opts) {
  const std::size_t n = c.rows(), m = c.cols(), k = c.dimension();
  const std::uint64_t q = c.field().size();
  auto w = weight_distribution(c, opts);
  auto wd = macwilliams(w, n, m, k, q);
  MrdCriteria r;
  r.d = min_distance(w, n, m);
  r.dual_d = min_distance(wd, n, m);
  const std::size_t lo = std::min(n, m), hi = std::max(n, m);
  r.singleton = k == hi * (lo + 1 - r.d);
  r.dual_distance = r.d + r.dual_d == lo + 2;
  if (m >= n) {
    const std::size_t keep = n + 1 - r.d;
    if (keep == 0) {
      r.projection_surjective = true;
    } else {
      std::vector<FqMatrix> images;
      for (const auto& b : c.basis()) images.push_back(row_block(b, n - keep, keep));
      auto image = MatrixCode::span_of(c.field_ptr(), keep, m, images);
      r.projection_surjective = image.dimension() == keep * m;
    }
  }
  return r;
}

bool is_mrd(const MatrixCode& c, const EnumerationOptions& opts) {
  auto r = mrd_criteria(c, opts);
  if (r.projection_surjective &&
      (r.singleton != r.dual_distance || r.singleton != *r.projection_surjective))
    throw InconsistencyError("MRD characterisations disagree");
  return r.singleton;
}

bool is_dually_qmrd(const MatrixCode& c, const EnumerationOptions& opts) {
  auto w = weight_distribution(c, opts);
  auto wd = macwilliams(w, c.rows(), c.cols(), c.dimension(), c.field().size());
  return min_distance(w, c.rows(), c.cols()) + min_distance(wd, c.rows(), c.cols()) ==
         std::min(c.rows(), c.cols()) + 1;
}

MatrixCode append_zero_column_code(const MatrixCode& d) {
  std::vector<FqMatrix> basis;
  for (const auto& b : d.basis()) basis.push_back(hstack(b, FqMatrix(d.field_ptr(), d.rows(), 1)));
  return MatrixCode(d.field_ptr(), d.rows(), d.cols() + 1, std::move(basis));
}

SupportRestriction codewords_with_support_in(const MatrixCode& c, const Subspace& u, const EnumerationOptions& opts) {
  const std::size_t n = c.rows(), m = c.cols(), k = c.dimension();
  if (u.ambient() != n) throw std::invalid_argument("U must be a subspace of F_q^n");
  // Columns lie in U iff they are annihilated by a basis P of U^perp.
  Subspace perp = orthogonal_complement(u);
  const FqMatrix& p = perp.basis();
  const std::size_t cons = p.rows() * m;
  FqMatrix constraint(c.field_ptr(), cons, k);
  for (std::size_t j = 0; j < k; ++j) {
    FqMatrix pb = p.rows() ? p * c.basis()[j] : FqMatrix(c.field_ptr(), 0, m);
    for (std::size_t e = 0; e < cons; ++e) constraint(e, j) = pb.entries()[e];
  }
  FqMatrix coeffs = kernel_basis(constraint);
  std::vector<FqMatrix> words;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) words.push_back(c.codeword(coeffs.row(r)));
  MatrixCode sub(c.field_ptr(), n, m, std::move(words));

  struct State {
    std::vector<FqMatrix> exact;
    std::vector<Elem> scratch;
  };
  auto states = detail::enumerate_codewords<State>(
      sub, opts, "codewords_with_support_in", [&](State& s, std::span<const Elem> word) {
        if (rank_of(c.field(), word, n, m, s.scratch) == u.dim())
          s.exact.emplace_back(c.field_ptr(), n, m, std::vector<Elem>(word.begin(), word.end()));
      });
  std::vector<FqMatrix> exact;
  for (auto& s : states)
    for (auto& x : s.exact) exact.push_back(std::move(x));
  std::sort(exact.begin(), exact.end(), [](const FqMatrix& a, const FqMatrix& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                        b.entries().end());
  });
  return {std::move(sub), std::move(exact)};
}

std::size_t external_distance(const MatrixCode& c, const EnumerationOptions& opts) {
  auto wd = macwilliams(weight_distribution(c, opts), c.rows(), c.cols(), c.dimension(), c.field().size());
  return wd.nonzero_weights(1, static_cast<int>(c.rows())).size();
}

std::size_t covering_radius(const MatrixCode& c, const EnumerationOptions& opts) {
  const Field& f = c.field();
  const std::uint64_t q = f.size();
  const std::size_t n = c.rows(), m = c.cols(), len = n * m;
  std::uint64_t ambient = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (ambient > opts.max_ambient / q)
      throw BudgetExceeded("covering_radius needs " + std::to_string(q) + "^" + std::to_string(len) +
                           " ambient matrices; the budget is " + std::to_string(opts.max_ambient));
    ambient *= q;
  }
  // Cosets of C are labelled by syndromes H vec(Z), H a basis of C*.
  FqMatrix h = kernel_basis(c.generator());
  const std::size_t r = h.rows();
  std::uint64_t cosets = 1;
  for (std::size_t i = 0; i < r; ++i) cosets *= q;
  std::vector<std::uint8_t> best(cosets, static_cast<std::uint8_t>(std::min(n, m) + 1));
  std::vector<Elem> z(len, 0), scratch;
  for (std::uint64_t idx = 0; idx < ambient; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < len; ++i) {
      z[i] = static_cast<Elem>(x % q);
      x /= q;
    }
    std::uint64_t syn = 0;
    for (std::size_t row = 0; row < r; ++row) {
      Elem s = 0;
      for (std::size_t i = 0; i < len; ++i)
        if (h(row, i) != 0 && z[i] != 0) s = f.add(s, f.mul(h(row, i), z[i]));
      syn = syn * q + s;
    }
    auto rk = static_cast<std::uint8_t>(rank_of(f, z, n, m, scratch));
    if (rk < best[syn]) best[syn] = rk;
  }
  return *std::max_element(best.begin(), best.end());
}

}  // namespace rankdesigns

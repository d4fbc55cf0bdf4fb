#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rankdesigns/gf.hpp"
#include "rankdesigns/linalg.hpp"
#include "rankdesigns/qcomb.hpp"

namespace rankdesigns {

/// Hard limits for exhaustive enumeration. Exceeding one is an error, never
/// a reason to sample.
struct EnumerationOptions {
  std::uint64_t max_codewords = std::uint64_t{1} << 24;
  std::uint64_t max_ambient = std::uint64_t{1} << 20;
  std::uint64_t max_subspaces = std::uint64_t{1} << 22;
  unsigned threads = 1;
};

/// (W_0, ..., W_n): number of codewords of each rank.
class WeightDistribution {
 public:
  WeightDistribution() = default;
  explicit WeightDistribution(std::vector<BigCount> counts);

  std::size_t max_rank() const { return counts_.size() - 1; }
  std::size_t size() const { return counts_.size(); }
  const BigCount& operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<BigCount>& counts() const { return counts_; }

  BigCount total() const;
  /// Ranks i in [lo, hi] with W_i != 0.
  std::vector<int> nonzero_weights(int lo, int hi) const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  std::vector<BigCount> counts_;
};

/// An F_q-linear subspace of F_q^{n x m}, held as an F_q-basis.
class MatrixCode {
 public:
  /// The basis must be linearly independent; k = 0 (the zero code) is allowed.
  MatrixCode(std::shared_ptr<const Field> field, std::size_t n, std::size_t m, std::vector<FqMatrix> basis);

  /// Code spanned by `words`, which may be dependent.
  static MatrixCode span_of(std::shared_ptr<const Field> field, std::size_t n, std::size_t m,
                            const std::vector<FqMatrix>& words);
  static MatrixCode zero(std::shared_ptr<const Field> field, std::size_t n, std::size_t m);
  static MatrixCode full(std::shared_ptr<const Field> field, std::size_t n, std::size_t m);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::size_t rows() const { return n_; }
  std::size_t cols() const { return m_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<FqMatrix>& basis() const { return basis_; }

  /// k x (n m) matrix whose rows are the flattened basis elements.
  FqMatrix generator() const;
  /// Reduced row echelon form of generator(): equal codes, equal forms.
  FqMatrix canonical_generator() const;

  FqMatrix codeword(std::span<const Elem> coefficients) const;

  friend bool operator==(const MatrixCode& a, const MatrixCode& b);

 private:
  std::shared_ptr<const Field> field_;
  std::size_t n_;
  std::size_t m_;
  std::vector<FqMatrix> basis_;
};

/// An F_{q^m}-linear subspace of F_{q^m}^n given by a k x n generator.
class VectorCode {
 public:
  VectorCode(std::shared_ptr<const ExtField> ext, ExtMatrix generator);

  const ExtField& ext() const { return *ext_; }
  const std::shared_ptr<const ExtField>& ext_ptr() const { return ext_; }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const ExtMatrix& generator() const { return generator_; }

 private:
  std::shared_ptr<const ExtField> ext_;
  ExtMatrix generator_;
};

/// x in F_{q^m}^n  ->  n x m matrix of coordinates in a fixed F_q-basis.
class CoordinateMap {
 public:
  CoordinateMap(std::shared_ptr<const ExtField> ext, std::vector<Elem> basis);

  const std::vector<Elem>& basis() const { return basis_; }
  std::vector<Elem> coordinates(Elem a) const;
  FqMatrix operator()(std::span<const Elem> x) const;

 private:
  std::shared_ptr<const ExtField> ext_;
  std::vector<Elem> basis_;
  FqMatrix to_basis_;  // polynomial coordinates -> basis coordinates
};

/// Gamma(C) as an F_q-[n x m, m k] matrix code.
MatrixCode expand(const VectorCode& c, std::span<const Elem> gamma);

/// C* under <X, Y> = Tr(X Y^T).
MatrixCode dual(const MatrixCode& c);

/// Dual under the standard inner product of F_{q^m}^n.
VectorCode dual_vector(const VectorCode& c);

/// A C = {A X : X in C}; A must be invertible.
MatrixCode left_multiply(const FqMatrix& a, const MatrixCode& c);

MatrixCode transpose_code(const MatrixCode& c);

/// Exact W(C) by enumerating all q^k codewords.
WeightDistribution weight_distribution(const MatrixCode& c, const EnumerationOptions& opts = {});

/// Minimum nonzero rank; min(n, m) + 1 for the zero code.
std::size_t min_distance(const MatrixCode& c, const EnumerationOptions& opts = {});
std::size_t min_distance(const WeightDistribution& w, std::size_t n, std::size_t m);

/// Distribution of the dual of any F_q-[n x m, k] code with distribution w.
WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t m, std::size_t k,
                               std::uint64_t q);

/// Pi(C, A, s) = { rows s+1..n of A X : X in C }.
MatrixCode puncture(const MatrixCode& c, const FqMatrix& a, std::size_t s);

/// Sigma(C, A, s): the same projection restricted to X with (A X) vanishing
/// on its first s rows.
MatrixCode shorten(const MatrixCode& c, const FqMatrix& a, std::size_t s);

/// Weight distribution of every Pi(C, A, t) for a code whose dual has at
/// most d - t nonzero weights in [1, n - t], determined from those weights.
WeightDistribution punctured_wd_from_dual_weights(std::size_t n, std::size_t m, std::size_t k, std::uint64_t q,
                                                  std::size_t t, std::size_t d,
                                                  std::span<const int> dual_weights);

/// Gabidulin code with generator G_ij = g_j^{q^i}, i < k.
VectorCode gabidulin(std::shared_ptr<const ExtField> ext, std::size_t n, std::size_t k,
                     std::span<const Elem> points);

/// The code with parity-check rows (a_j) and (a_j^{q^s}).
VectorCode frobenius_parity_check_code(std::shared_ptr<const ExtField> ext, std::span<const Elem> points,
                                       unsigned s);

struct MrdCriteria {
  std::size_t d = 0;
  std::size_t dual_d = 0;
  bool singleton = false;     // k = max(n,m) (min(n,m) - d + 1)
  bool dual_distance = false; // d + d* = min(n,m) + 2
  std::optional<bool> projection_surjective;  // evaluated when m >= n
};

MrdCriteria mrd_criteria(const MatrixCode& c, const EnumerationOptions& opts = {});

/// Singleton equality; throws std::logic_error if the equivalent
/// characterisations disagree (m >= n).
bool is_mrd(const MatrixCode& c, const EnumerationOptions& opts = {});

/// d(C) + d(C*) = min(n, m) + 1.
bool is_dually_qmrd(const MatrixCode& c, const EnumerationOptions& opts = {});

/// { [M | 0] : M in D } in F_q^{n x (m+1)}.
MatrixCode append_zero_column_code(const MatrixCode& d);

struct SupportRestriction {
  MatrixCode subcode;               // C(U): codewords with support in U
  std::vector<FqMatrix> exact;      // C_=(U): codewords with support equal to U
};

SupportRestriction codewords_with_support_in(const MatrixCode& c, const Subspace& u,
                                             const EnumerationOptions& opts = {});

/// Number of nonzero weights of C* in [1, n].
std::size_t external_distance(const MatrixCode& c, const EnumerationOptions& opts = {});

/// max over F_q^{n x m} of the rank distance to C (syndrome sweep).
std::size_t covering_radius(const MatrixCode& c, const EnumerationOptions& opts = {});

}  // namespace rankdesigns

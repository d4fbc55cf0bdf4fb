#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rankdesigns/codes.hpp"
#include "rankdesigns/linalg.hpp"
#include "rankdesigns/qcomb.hpp"

namespace rankdesigns {

/// A simple block family of r-subspaces of F_q^n, optionally with a
/// verified strength t and index lambda.
class DesignInstance {
 public:
  /// Blocks are sorted canonically; duplicates or mixed shapes throw.
  DesignInstance(std::shared_ptr<const Field> field, std::size_t n, std::size_t r, std::vector<Subspace> blocks);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::uint64_t q() const { return field_->size(); }
  std::size_t ambient() const { return n_; }
  std::size_t block_dim() const { return r_; }
  const std::vector<Subspace>& blocks() const { return blocks_; }

  std::optional<std::size_t> strength() const { return t_; }
  const std::optional<BigCount>& lambda() const { return lambda_; }
  void set_parameters(std::size_t t, BigCount lambda) {
    t_ = t;
    lambda_ = std::move(lambda);
  }

  friend bool operator==(const DesignInstance& a, const DesignInstance& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.blocks_ == b.blocks_;
  }

 private:
  std::shared_ptr<const Field> field_;
  std::size_t n_;
  std::size_t r_;
  std::vector<Subspace> blocks_;
  std::optional<std::size_t> t_;
  std::optional<BigCount> lambda_;
};

/// Every t-dimensional subspace of F_q^n once, in canonical RREF order:
/// pivot patterns lexicographically, then free entries lexicographically.
std::vector<Subspace> enumerate_subspaces(const std::shared_ptr<const Field>& field, std::size_t n, std::size_t t,
                                          const EnumerationOptions& opts = {});
std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t t, std::uint64_t q,
                                          const EnumerationOptions& opts = {});

struct DesignCounterexample {
  Subspace first;           // the first t-subspace in enumeration order
  BigCount first_count;
  Subspace witness;         // the first t-subspace whose count differs
  BigCount witness_count;
};

struct DesignCheck {
  std::optional<BigCount> lambda;                      // set iff the blocks form a t-design
  std::optional<DesignCounterexample> counterexample;  // set otherwise
  explicit operator bool() const { return lambda.has_value(); }
};

/// Counts, for every t-subspace T, the blocks containing T; stops at the
/// first T whose count differs from that of the first T.
DesignCheck verify_design(const std::vector<Subspace>& blocks, std::size_t t, const EnumerationOptions& opts = {});
DesignCheck verify_design(const DesignInstance& design, std::size_t t, const EnumerationOptions& opts = {});

/// lambda [n-t choose r]_q / [n-t choose r-t]_q; throws DomainError if not integral.
BigCount dual_design_lambda(std::size_t n, std::size_t r, std::size_t t, const BigCount& lambda, std::uint64_t q);

/// Orthogonal complements of the blocks, re-verified against the predicted index.
DesignInstance dual_design(const DesignInstance& design, const EnumerationOptions& opts = {});

/// lambda_{i,j} = q^{j(r-i)} lambda [n-i-j choose r-i]_q / [n-t choose r-t]_q.
BigCount intersection_number(std::size_t t, std::size_t n, std::size_t r, const BigCount& lambda, std::size_t i,
                             std::size_t j, std::uint64_t q);

/// u-support -> |C_=(U)|, from one pass over the codewords of rank u.
std::map<Subspace, BigCount> supports_of_rank(const MatrixCode& c, std::size_t u,
                                              const EnumerationOptions& opts = {});

struct InvarianceCheck {
  bool invariant = true;
  std::optional<BigCount> mu;  // common |C_=(U)|; absent if there is no u-support
  std::optional<std::pair<std::pair<Subspace, BigCount>, std::pair<Subspace, BigCount>>> witnesses;
  explicit operator bool() const { return invariant; }
};

InvarianceCheck is_u_invariant(const MatrixCode& c, std::size_t u, const EnumerationOptions& opts = {});
InvarianceCheck invariance_of(const std::map<Subspace, BigCount>& supports);

/// The supports as an (unverified) design instance on F_q^n.
DesignInstance design_from_supports(const MatrixCode& c, std::size_t u, const std::map<Subspace, BigCount>& supports);

}  // namespace rankdesigns

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankdesigns/codes.hpp"
#include "rankdesigns/designs.hpp"

namespace rankdesigns {

struct AMHypothesis {
  std::size_t t = 0;
  std::size_t d = 0;
  WeightDistribution weights;       // W(C)
  WeightDistribution dual_weights;  // W(C*)
  bool dual_brute_forced = false;   // W(C*) also enumerated and matched
  std::vector<int> dual_weights_in_window;  // i in [1, n - t] with W_i(C*) != 0
  bool holds = false;
};

/// Checks |{1 <= i <= n - t : W_i(C*) != 0}| <= d - t. Throws DomainError
/// unless 1 <= t < d.
AMHypothesis am_hypothesis(const MatrixCode& c, std::size_t t, const EnumerationOptions& opts = {});

struct AMLevel {
  std::size_t u = 0;
  BigCount mu;             // common |C_=(U)|
  DesignInstance design;   // verified, with strength and lambda set
};

struct AMReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t q = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t d = 0;
  std::size_t dual_d = 0;
  std::size_t w = 0;
  std::size_t w_star = 0;
  AMHypothesis hypothesis;
  std::vector<AMLevel> primal;
  std::vector<AMLevel> dual;
  std::vector<std::string> notes;  // levels that were skipped or truncated
};

/// Extracts and verifies the designs held by C and C*. Throws DomainError if
/// the hypothesis fails or C (resp. C*) is not d-invariant (resp.
/// d*-invariant); a non-invariant higher level truncates the window and is
/// noted. A support family that fails verification throws InconsistencyError.
AMReport am_run(const MatrixCode& c, std::size_t t, std::optional<std::size_t> w = {},
                std::optional<std::size_t> w_star = {}, const EnumerationOptions& opts = {});

struct MrdTrivial {
  bool is_mrd = false;
  bool holds_trivial = false;
  std::size_t d = 0;
  std::size_t supports = 0;
};

/// Singleton equality of Gamma(C) against the rank-d supports covering every
/// d-subspace; requires m >= n and throws InconsistencyError on disagreement.
MrdTrivial mrd_trivial_design_equivalence(const VectorCode& c, std::span<const Elem> gamma,
                                          const EnumerationOptions& opts = {});

}  // namespace rankdesigns

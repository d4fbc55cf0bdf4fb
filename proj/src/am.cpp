#include "rankdesigns/am.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rankdesigns/error.hpp"

namespace rankdesigns {

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << '}';
  return os.str();
}

std::string describe(const Subspace& s) {
  std::ostringstream os;
  os << '[';
  const auto& b = s.basis();
  for (std::size_t r = 0; r < b.rows(); ++r) {
    os << (r ? ", " : "") << '[';
    for (std::size_t c = 0; c < b.cols(); ++c) os << (c ? "," : "") << b(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool fits(std::uint64_t q, std::size_t k, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / q) return false;
    total *= q;
  }
  return true;
}

// Scans ranks lo..hi of `code`, stopping at the first non-invariant level
// above lo.
void collect_levels(const MatrixCode& code, const char* side, std::size_t lo, std::size_t hi, std::size_t t,
                    const EnumerationOptions& opts, std::vector<AMLevel>& out, std::vector<std::string>& notes) {
  for (std::size_t u = lo; u <= hi; ++u) {
    auto supports = supports_of_rank(code, u, opts);
    if (supports.empty()) continue;
    auto inv = invariance_of(supports);
    if (!inv) {
      const auto& [a, b] = *inv.witnesses;
      std::string msg = std::string(side) + " is not " + std::to_string(u) + "-invariant: " + describe(a.first) +
                        " carries " + a.second.get_str() + " words, " + describe(b.first) + " carries " +
                        b.second.get_str();
      if (u == lo) throw DomainError(msg);
      notes.push_back(msg + "; window truncated to " + std::to_string(u - 1));
      return;
    }
    if (u < t) {
      notes.push_back(std::string(side) + " rank " + std::to_string(u) + " supports are smaller than t; skipped");
      continue;
    }
    DesignInstance design = design_from_supports(code, u, supports);
    auto check = verify_design(design, t, opts);
    if (!check) {
      const auto& cx = *check.counterexample;
      throw InconsistencyError(std::string(side) + " rank " + std::to_string(u) + " supports are not a " +
                               std::to_string(t) + "-design: " + describe(cx.first) + " lies in " +
                               cx.first_count.get_str() + " blocks, " + describe(cx.witness) + " in " +
                               cx.witness_count.get_str());
    }
    design.set_parameters(t, *check.lambda);
    out.push_back(AMLevel{u, *inv.mu, std::move(design)});
  }
}

}  // namespace

AMHypothesis am_hypothesis(const MatrixCode& c, std::size_t t, const EnumerationOptions& opts) {
  const std::size_t n = c.rows(), m = c.cols(), k = c.dimension();
  const std::uint64_t q = c.field().size();
  AMHypothesis h;
  h.t = t;
  h.weights = weight_distribution(c, opts);
  h.d = min_distance(h.weights, n, m);
  if (t < 1 || t >= h.d) throw DomainError("strength must satisfy t < d");
  h.dual_weights = macwilliams(h.weights, n, m, k, q);
  if (fits(q, n * m - k, opts.max_codewords)) {
    auto brute = weight_distribution(dual(c), opts);
    if (!(brute == h.dual_weights))
      throw InconsistencyError("MacWilliams transform disagrees with the enumerated dual distribution");
    h.dual_brute_forced = true;
  }
  h.dual_weights_in_window = h.dual_weights.nonzero_weights(1, static_cast<int>(n - t));
  h.holds = h.dual_weights_in_window.size() <= h.d - t;
  return h;
}

AMReport am_run(const MatrixCode& c, std::size_t t, std::optional<std::size_t> w, std::optional<std::size_t> w_star,
                const EnumerationOptions& opts) {
  AMReport r;
  r.n = c.rows();
  r.m = c.cols();
  r.q = c.field().size();
  r.k = c.dimension();
  r.t = t;
  r.hypothesis = am_hypothesis(c, t, opts);
  if (!r.hypothesis.holds)
    throw DomainError("hypothesis fails: dual weights " + join(r.hypothesis.dual_weights_in_window) + " in [1, " +
                      std::to_string(r.n - t) + "] exceed d - t = " + std::to_string(r.hypothesis.d - t));
  r.d = r.hypothesis.d;
  r.dual_d = min_distance(r.hypothesis.dual_weights, r.n, r.m);
  r.w = w.value_or(r.d);
  r.w_star = w_star.value_or(r.dual_d);
  if (r.w < r.d || r.w > r.n) throw std::invalid_argument("w must satisfy d <= w <= n");
  if (r.w_star < r.dual_d || r.w_star > r.n) throw std::invalid_argument("w* must satisfy d* <= w* <= n");

  collect_levels(c, "C", r.d, r.w, t, opts, r.primal, r.notes);
  if (r.dual_d <= std::min(r.w_star, r.n - t)) {
    MatrixCode cd = dual(c);
    collect_levels(cd, "C*", r.dual_d, std::min(r.w_star, r.n - t), t, opts, r.dual, r.notes);
  }
  return r;
}

MrdTrivial mrd_trivial_design_equivalence(const VectorCode& c, std::span<const Elem> gamma,
                                          const EnumerationOptions& opts) {
  const std::size_t n = c.length(), m = c.ext().degree();
  if (m < n) throw std::invalid_argument("the MRD/trivial-design equivalence needs m >= n");
  MatrixCode g = expand(c, gamma);
  MrdTrivial r;
  r.d = min_distance(g, opts);
  r.is_mrd = g.dimension() == m * (n - r.d + 1);

  auto supports = supports_of_rank(g, r.d, opts);
  r.supports = supports.size();
  auto all = enumerate_subspaces(g.field_ptr(), n, r.d, opts);
  r.holds_trivial = supports.size() == all.size() &&
                    std::all_of(all.begin(), all.end(), [&](const Subspace& s) { return supports.contains(s); });
  if (r.is_mrd != r.holds_trivial)
    throw InconsistencyError("MRD and trivial-design criteria disagree (is_mrd = " + std::to_string(r.is_mrd) +
                             ", holds_trivial = " + std::to_string(r.holds_trivial) + ")");
  return r;
}

}  // namespace rankdesigns

#include "rankdesigns/designs.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <unordered_map>

#include "enumerate.hpp"
#include "rankdesigns/error.hpp"

namespace rankdesigns {

DesignInstance::DesignInstance(std::shared_ptr<const Field> field, std::size_t n, std::size_t r,
                               std::vector<Subspace> blocks)
    : field_(std::move(field)), n_(n), r_(r), blocks_(std::move(blocks)) {
  if (r_ > n_) throw std::invalid_argument("block dimension exceeds the ambient dimension");
  for (const auto& b : blocks_) {
    if (b.ambient() != n_) throw std::invalid_argument("block lives in a different ambient space");
    if (b.dim() != r_) throw std::invalid_argument("block has dimension " + std::to_string(b.dim()) +
                                                   ", expected " + std::to_string(r_));
    if (!(b.field() == *field_)) throw std::invalid_argument("block is over a different field");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
    throw std::invalid_argument("repeated block; only simple designs are supported");
}

// ---------------------------------------------------------- enumeration

std::vector<Subspace> enumerate_subspaces(const std::shared_ptr<const Field>& field, std::size_t n, std::size_t t,
                                          const EnumerationOptions& opts) {
  if (t > n) return {};
  const std::uint64_t q = field->size();
  BigCount count = q_binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(t), q);
  if (count > BigCount(static_cast<unsigned long>(opts.max_subspaces)))
    throw BudgetExceeded("enumerate_subspaces needs " + count.get_str() + " subspaces; the budget is " +
                         std::to_string(opts.max_subspaces));
  std::vector<Subspace> out;
  out.reserve(count.get_ui());
  if (t == 0) {
    out.push_back(Subspace::zero(field, n));
    return out;
  }
  std::vector<std::size_t> piv(t);
  for (std::size_t i = 0; i < t; ++i) piv[i] = i;
  while (true) {
    // Free positions: row i, column j > piv[i], j not a pivot column.
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < t; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free.emplace_back(i, j);
    FqMatrix b(field, t, n);
    for (std::size_t i = 0; i < t; ++i) b(i, piv[i]) = 1;
    std::vector<Elem> digits(free.size(), 0);
    while (true) {
      for (std::size_t f = 0; f < free.size(); ++f) b(free[f].first, free[f].second) = digits[f];
      out.push_back(Subspace::span(b));
      std::size_t f = free.size();
      while (f-- > 0) {
        if (++digits[f] < q) break;
        digits[f] = 0;
      }
      if (f == static_cast<std::size_t>(-1)) break;
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = t;
    while (i-- > 0)
      if (piv[i] < n - t + i) break;
    if (i == static_cast<std::size_t>(-1)) break;
    ++piv[i];
    for (std::size_t j = i + 1; j < t; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces(std::size_t n, std::size_t t, std::uint64_t q,
                                          const EnumerationOptions& opts) {
  return enumerate_subspaces(Field::of_order(q), n, t, opts);
}

// --------------------------------------------------------- verification

DesignCheck verify_design(const std::vector<Subspace>& blocks, std::size_t t, const EnumerationOptions& opts) {
  if (blocks.empty()) throw std::invalid_argument("cannot verify an empty block family");
  const std::size_t n = blocks.front().ambient(), r = blocks.front().dim();
  for (const auto& b : blocks)
    if (b.ambient() != n || b.dim() != r) throw std::invalid_argument("blocks must share ambient space and dimension");
  if (t > r) throw std::invalid_argument("strength exceeds the block dimension");
  auto ts = enumerate_subspaces(blocks.front().field_ptr(), n, t, opts);

  auto count = [&](const Subspace& s) {
    std::uint64_t c = 0;
    for (const auto& b : blocks)
      if (contains(b, s)) ++c;
    return c;
  };
  const std::uint64_t reference = count(ts[0]);

  const std::size_t total = ts.size();
  const unsigned workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(opts.threads, total)));
  std::vector<std::size_t> first_bad(workers, total);
  std::vector<std::uint64_t> bad_count(workers, 0);
  auto run = [&](unsigned w) {
    const std::size_t lo = total * w / workers, hi = total * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) {
      std::uint64_t c = count(ts[i]);
      if (c != reference) {
        first_bad[w] = i;
        bad_count[w] = c;
        return;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (unsigned w = 0; w < workers; ++w)
    if (first_bad[w] != total)
      return {std::nullopt, DesignCounterexample{ts[0], BigCount(static_cast<unsigned long>(reference)),
                                                 ts[first_bad[w]], BigCount(static_cast<unsigned long>(bad_count[w]))}};
  return {BigCount(static_cast<unsigned long>(reference)), std::nullopt};
}

DesignCheck verify_design(const DesignInstance& design, std::size_t t, const EnumerationOptions& opts) {
  return verify_design(design.blocks(), t, opts);
}

BigCount dual_design_lambda(std::size_t n, std::size_t r, std::size_t t, const BigCount& lambda, std::uint64_t q) {
  BigCount num = lambda * q_binomial(n - t, r, q);
  BigCount den = q_binomial(n - t, r - t, q);
  if (den == 0 || num % den != 0) throw DomainError("dual design index is not an integer");
  return num / den;
}

DesignInstance dual_design(const DesignInstance& design, const EnumerationOptions& opts) {
  if (!design.strength() || !design.lambda())
    throw std::invalid_argument("dual_design needs a design with verified strength and index");
  const std::size_t t = *design.strength(), n = design.ambient(), r = design.block_dim();
  BigCount predicted = dual_design_lambda(n, r, t, *design.lambda(), design.q());
  std::vector<Subspace> blocks;
  for (const auto& b : design.blocks()) blocks.push_back(orthogonal_complement(b));
  DesignInstance out(design.field_ptr(), n, n - r, std::move(blocks));
  if (n - r < t) {
    if (predicted != 0) throw DomainError("dual design verification mismatch");
  } else {
    auto check = verify_design(out, t, opts);
    if (!check) throw DomainError("dual design is not a " + std::to_string(t) + "-design");
    if (*check.lambda != predicted)
      throw DomainError("dual design index " + check.lambda->get_str() + " differs from the predicted " +
                        predicted.get_str());
  }
  out.set_parameters(t, predicted);
  return out;
}

BigCount intersection_number(std::size_t t, std::size_t n, std::size_t r, const BigCount& lambda, std::size_t i,
                             std::size_t j, std::uint64_t q) {
  if (i + j > t) throw std::invalid_argument("intersection numbers need i + j <= t");
  if (t > r || r > n) throw std::invalid_argument("design parameters need t <= r <= n");
  if (i > r) return 0;
  BigCount num = big_pow(q, j * (r - i)) * lambda * q_binomial(n - i - j, r - i, q);
  BigCount den = q_binomial(n - t, r - t, q);
  if (num % den != 0) throw DomainError("intersection number is not an integer");
  return num / den;
}

// ------------------------------------------------------------- supports

std::map<Subspace, BigCount> supports_of_rank(const MatrixCode& c, std::size_t u, const EnumerationOptions& opts) {
  struct State {
    std::unordered_map<Subspace, std::uint64_t> found;
    std::vector<Elem> scratch;
  };
  const std::size_t n = c.rows(), m = c.cols();
  auto states = detail::enumerate_codewords<State>(c, opts, "supports_of_rank", [&](State& s, std::span<const Elem> w) {
    if (rank_of(c.field(), w, n, m, s.scratch) != u) return;
    FqMatrix x(c.field_ptr(), n, m, std::vector<Elem>(w.begin(), w.end()));
    ++s.found[support(x)];
  });
  std::map<Subspace, BigCount> out;
  for (const auto& s : states)
    for (const auto& [sub, cnt] : s.found) out[sub] += static_cast<unsigned long>(cnt);
  return out;
}

InvarianceCheck invariance_of(const std::map<Subspace, BigCount>& supports) {
  InvarianceCheck r;
  if (supports.empty()) return r;
  auto first = supports.begin();
  for (auto it = std::next(first); it != supports.end(); ++it)
    if (it->second != first->second) {
      r.invariant = false;
      r.witnesses = {{first->first, first->second}, {it->first, it->second}};
      return r;
    }
  r.mu = first->second;
  return r;
}

InvarianceCheck is_u_invariant(const MatrixCode& c, std::size_t u, const EnumerationOptions& opts) {
  return invariance_of(supports_of_rank(c, u, opts));
}

DesignInstance design_from_supports(const MatrixCode& c, std::size_t u, const std::map<Subspace, BigCount>& supports) {
  std::vector<Subspace> blocks;
  for (const auto& kv : supports) blocks.push_back(kv.first);
  return DesignInstance(c.field_ptr(), c.rows(), u, std::move(blocks));
}

}  // namespace rankdesigns

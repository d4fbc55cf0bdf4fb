#pragma once

// Parallel exhaustive codeword enumeration shared by codes and designs.

#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "rankdesigns/codes.hpp"
#include "rankdesigns/error.hpp"

namespace rankdesigns::detail {

inline std::uint64_t checked_count(std::uint64_t q, std::size_t k, std::uint64_t budget, const char* what) {
  BigCount total = big_pow(q, k);
  if (total > BigCount(static_cast<unsigned long>(budget)))
    throw BudgetExceeded(std::string(what) + " needs " + total.get_str() + " = " + std::to_string(q) + "^" +
                         std::to_string(k) + " codewords; the budget is " + std::to_string(budget));
  return total.get_ui();
}

/// Visits every codeword of `c` as a row-major span of n*m entries.
///
/// Coefficient vectors run in lexicographic order; worker w takes the
/// leading coefficients w, w + T, ... and owns one State. The caller merges
/// the returned states, which must be order-independent (sums, unions).
template <typename State, typename Visit>
std::vector<State> enumerate_codewords(const MatrixCode& c, const EnumerationOptions& opts, const char* what,
                                       Visit visit) {
  const Field& f = c.field();
  const std::uint64_t q = f.size();
  const std::size_t k = c.dimension();
  const std::size_t len = c.rows() * c.cols();
  checked_count(q, k, opts.max_codewords, what);

  if (k == 0) {
    std::vector<State> states(1);
    std::vector<Elem> zero(len, 0);
    visit(states[0], std::span<const Elem>(zero));
    return states;
  }

  std::vector<std::vector<Elem>> basis;
  for (const auto& b : c.basis()) basis.emplace_back(b.entries().begin(), b.entries().end());

  const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(opts.threads, q)));
  std::vector<State> states(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto run = [&](unsigned w) {
    try {
      std::vector<Elem> word(len);
      std::vector<Elem> coeff(k);
      auto add_scaled = [&](std::size_t j, Elem delta) {
        const auto& b = basis[j];
        if (q == 2) {
          for (std::size_t i = 0; i < len; ++i) word[i] ^= b[i];
        } else {
          for (std::size_t i = 0; i < len; ++i)
            if (b[i] != 0) word[i] = f.add(word[i], f.mul(delta, b[i]));
        }
      };
      for (std::uint64_t lead = w; lead < q; lead += workers) {
        std::fill(word.begin(), word.end(), 0);
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[0] = static_cast<Elem>(lead);
        if (lead != 0) add_scaled(0, coeff[0]);
        while (true) {
          visit(states[w], std::span<const Elem>(word));
          std::size_t j = k;
          while (j-- > 1) {
            Elem old = coeff[j];
            Elem next = old + 1 == q ? 0 : old + 1;
            coeff[j] = next;
            add_scaled(j, f.sub(next, old));
            if (next != 0) break;
          }
          if (j == 0) break;  // every trailing digit wrapped
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return states;
}

}  // namespace rankdesigns::detail

#pragma once

#include <vector>

#include "rankdesigns/codes.hpp"

namespace rankdesigns::fixtures {

/// Vector code, the basis used to expand it, and Gamma(C).
struct ExpandedCode {
  VectorCode code;
  std::vector<Elem> gamma;
  MatrixCode matrix;
};

/// The [2s, 2s-2] code over F_{q^{2s}} with parity-check rows (a_j) and
/// (a_j^{q^s}), a_j the polynomial basis. Needs s >= 2.
ExpandedCode spread_code(unsigned s, unsigned q = 2);

/// Gamma(C) for the same construction; for s = 1 this is the zero code in
/// F_q^{2 x 2}.
MatrixCode spread_matrix_code(unsigned s, unsigned q = 2);

/// Gabidulin F_{q^m}-[n, k] on the first n polynomial-basis points (n <= m).
ExpandedCode gabidulin_code(unsigned q, unsigned m, std::size_t n, std::size_t k);

/// Expanded Gabidulin F_8-[3,2,2] with a zero column appended: an
/// F_2-[3 x 4, 6, 2] code that is neither MRD nor dually QMRD.
MatrixCode zero_column_code();

}  // namespace rankdesigns::fixtures

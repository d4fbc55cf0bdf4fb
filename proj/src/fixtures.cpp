#include "rankdesigns/fixtures.hpp"

#include <stdexcept>

namespace rankdesigns::fixtures {

ExpandedCode spread_code(unsigned s, unsigned q) {
  if (s < 2) throw std::invalid_argument("the spread code is zero for s = 1");
  auto ext = ExtField::make(Field::of_order(q), 2 * s);
  auto alpha = polynomial_basis(*ext);
  VectorCode c = frobenius_parity_check_code(ext, alpha, s);
  auto gamma = polynomial_basis(*ext);
  MatrixCode g = expand(c, gamma);
  return {std::move(c), std::move(gamma), std::move(g)};
}

MatrixCode spread_matrix_code(unsigned s, unsigned q) {
  if (s == 1) return MatrixCode::zero(Field::of_order(q), 2, 2);
  return spread_code(s, q).matrix;
}

ExpandedCode gabidulin_code(unsigned q, unsigned m, std::size_t n, std::size_t k) {
  auto ext = ExtField::make(Field::of_order(q), m);
  auto basis = polynomial_basis(*ext);
  if (n > basis.size()) throw std::invalid_argument("Gabidulin fixture needs n <= m");
  std::vector<Elem> points(basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(n));
  VectorCode c = gabidulin(ext, n, k, points);
  MatrixCode g = expand(c, basis);
  return {std::move(c), std::move(basis), std::move(g)};
}

MatrixCode zero_column_code() { return append_zero_column_code(gabidulin_code(2, 3, 3, 2).matrix); }

}  // namespace rankdesigns::fixtures

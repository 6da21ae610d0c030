#include "gkz/exactalg/poly_matrix.hpp"

#include <utility>

#include "gkz/errors.hpp"

namespace gkz::exact {

LaurentPolynomial determinant(const PolyMatrix& input, std::size_t nvars) {
  const std::size_t n = input.size();
  for (const auto& row : input)
    if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
  if (n == 0) return LaurentPolynomial::constant(nvars, 1);
  PolyMatrix m = input;
  LaurentPolynomial prev = LaurentPolynomial::constant(nvars, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPolynomial(nvars);
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = t.divide_exact(prev);
        if (!q) throw Error("inexact Bareiss division");
        m[i][j] = std::move(*q);
      }
      m[i][k] = LaurentPolynomial(nvars);
    }
    prev = m[k][k];
  }
  LaurentPolynomial d = m[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace gkz::exact

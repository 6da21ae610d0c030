#pragma once

#include <vector>

#include "gkz/exactalg/laurent_polynomial.hpp"

namespace gkz::exact {

using PolyMatrix = std::vector<std::vector<LaurentPolynomial>>;

/// Determinant of a square matrix of polynomials by fraction-free Bareiss
/// elimination; every intermediate division is exact. All entries must share
/// one ring, given by nvars.
LaurentPolynomial determinant(const PolyMatrix& m, std::size_t nvars);

}  // namespace gkz::exact

#include "gkz/polytope/configuration.hpp"

#include <set>

#include "gkz/errors.hpp"

namespace gkz::polytope {

Configuration::Configuration(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0) throw InvalidInput("configuration matrix is empty");
  if (exact::rank(matrix_) != matrix_.rows())
    throw InvalidInput("configuration matrix has rank " + std::to_string(exact::rank(matrix_)) + " < d = " +
                       std::to_string(matrix_.rows()));
  std::set<IntVector> seen;
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    if (!seen.insert(matrix_.column(j)).second)
      throw InvalidInput("column " + std::to_string(j + 1) + " repeats an earlier column");
  }
  auto y = exact::solve_left(matrix_, RatVector(matrix_.cols(), Rational(1)));
  if (!y) throw InvalidInput("(1, ..., 1) is not in the row span of the configuration");
  height_ = std::move(*y);
}

Configuration Configuration::from_spanning_rows(const IntMatrix& matrix) {
  auto rows = exact::independent_columns(matrix.transpose());
  return Configuration(matrix.select_rows(rows));
}

Configuration Configuration::restrict_to(std::span<const std::size_t> columns) const {
  return from_spanning_rows(matrix_.select_columns(columns));
}

std::size_t affine_dimension(const Configuration& a, std::span<const std::size_t> columns) {
  if (columns.empty()) throw InvalidInput("affine dimension of the empty set");
  return exact::rank(a.matrix().select_columns(columns)) - 1;
}

}  // namespace gkz::polytope

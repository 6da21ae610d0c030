#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gkz/exactalg/int_matrix.hpp"

namespace gkz::polytope {

using exact::IntMatrix;
using exact::IntVector;
using exact::Integer;
using exact::Rational;
using exact::RatVector;

/// A point configuration A: an integer d x s matrix of rank d whose columns
/// are pairwise distinct and whose row span contains (1, ..., 1). The last
/// condition puts all columns on a common affine hyperplane, so affine
/// geometry is read off the columns directly.
class Configuration {
 public:
  /// Validates and throws InvalidInput with a specific message on failure.
  explicit Configuration(IntMatrix matrix);

  /// Drops dependent rows before validating, so any matrix whose columns
  /// are distinct and whose row span contains (1, ..., 1) is accepted.
  static Configuration from_spanning_rows(const IntMatrix& matrix);

  std::size_t d() const noexcept { return matrix_.rows(); }
  std::size_t s() const noexcept { return matrix_.cols(); }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  IntVector column(std::size_t j) const { return matrix_.column(j); }

  /// Subconfiguration on the listed columns, re-expressed with independent
  /// rows (the integer kernel is unchanged).
  Configuration restrict_to(std::span<const std::size_t> columns) const;

  /// Rational functional y with y^T A = (1, ..., 1).
  const RatVector& height() const noexcept { return height_; }

  std::string to_string() const { return matrix_.to_string(); }

 private:
  IntMatrix matrix_;
  RatVector height_;
};

/// Affine dimension of the columns with the given indices (rank - 1).
std::size_t affine_dimension(const Configuration& a, std::span<const std::size_t> columns);

}  // namespace gkz::polytope

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gkz/exactalg/numbers.hpp"

namespace gkz::exact {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows = 0);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  std::vector<IntVector> column_vectors() const;

  /// Submatrix formed by the listed columns, in the listed order.
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  IntMatrix select_rows(std::span<const std::size_t> rows) const;
  IntMatrix without_column(std::size_t j) const;
  /// Appends a row at the bottom.
  IntMatrix with_row(const IntVector& r) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  IntVector operator*(const IntVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::size_t rank(const IntMatrix& m);

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Row-style Hermite normal form: U * M = H with U unimodular, H in echelon
/// form, pivots positive and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

/// U * M * V = D, U and V unimodular, D diagonal with d1 | d2 | ... and
/// nonnegative entries.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
};
SmithForm smith_normal_form(const IntMatrix& m);

/// Lattice basis of ker_Z(M), canonicalized as the rows of a Hermite normal
/// form (first nonzero entry of each vector positive, echelon order).
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// True when w is an integer combination of the given vectors.
bool lattice_contains(const std::vector<IntVector>& generators, const IntVector& w);

/// Membership of a rational vector in the rational row span.
bool row_span_contains(const IntMatrix& m, const RatVector& v);

/// One rational solution x of M x = rhs (free variables set to zero).
std::optional<RatVector> solve(const IntMatrix& m, const RatVector& rhs);

/// One rational solution y of y^T M = rhs.
std::optional<RatVector> solve_left(const IntMatrix& m, const RatVector& rhs);

/// Basis of the rational kernel, each vector scaled to a primitive integer
/// vector.
std::vector<IntVector> rational_kernel(const IntMatrix& m);

/// Indices of a maximal linearly independent set of columns, chosen greedily
/// from the left.
std::vector<std::size_t> independent_columns(const IntMatrix& m);

/// Product of the Smith invariants: the index of the lattice spanned by the
/// columns inside its saturation. Zero for the zero matrix.
Integer lattice_index(const IntMatrix& m);

}  // namespace gkz::exact

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gkz/exactalg/laurent_polynomial.hpp"

namespace gkz::exact {

/// One factor P^e of a factored denominator.
struct DenominatorFactor {
  LaurentPolynomial poly;
  std::uint64_t exponent = 1;
};

/// Quotient N / (P_1^e_1 ... P_k^e_k) of a Laurent numerator by a factored
/// denominator.
///
/// Each factor is normalized on construction: its monomial gcd is moved into
/// the numerator, its coefficients are scaled to coprime integers with a
/// positive leading coefficient, and equal factors are merged. Factors that
/// reduce to monomials disappear entirely. No polynomial gcd is taken, so the
/// representation is not unique; equality compares N1 * D2 and N2 * D1.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(std::size_t nvars) : num_(nvars) {}
  RationalFunction(LaurentPolynomial numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPolynomial numerator, std::vector<DenominatorFactor> denominator);

  static RationalFunction constant(std::size_t nvars, const Rational& c);
  static RationalFunction variable(std::size_t nvars, std::size_t j);

  std::size_t num_vars() const noexcept { return num_.num_vars(); }
  const LaurentPolynomial& numerator() const noexcept { return num_; }
  const std::vector<DenominatorFactor>& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const noexcept { return den_.empty(); }

  /// Product of the denominator factors, expanded.
  LaurentPolynomial expanded_denominator() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction scaled(const Rational& c) const;
  RationalFunction pow(std::uint64_t n) const;
  /// Throws DomainError for the zero function.
  RationalFunction inverse() const;

  /// Quotient rule per factor: only factors with a nonzero partial derivative
  /// gain one power.
  RationalFunction derivative(std::size_t j) const;

  /// Throws DomainError when the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Deterministic text in the expression grammar.
  std::string to_string() const;

 private:
  void normalize();

  LaurentPolynomial num_;
  std::vector<DenominatorFactor> den_;
};

}  // namespace gkz::exact

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gkz/exactalg/numbers.hpp"

namespace gkz::exact {

/// Exponent vector of a Laurent monomial; entries may be negative.
using Exponent = std::vector<std::int64_t>;

struct Term {
  Exponent exponent;
  Rational coeff;
};

/// Canonical term order: higher total degree first, ties broken by
/// lexicographically larger exponent first. Returns <0 when a sorts first.
int compare_exponents(const Exponent& a, const Exponent& b);

std::int64_t total_degree(const Exponent& e);

/// Sparse Laurent polynomial in a fixed number of variables with exact
/// rational coefficients. Terms are kept sorted in the canonical order and
/// never carry a zero coefficient, so structural equality is value equality.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPolynomial constant(std::size_t nvars, const Rational& c);
  static LaurentPolynomial variable(std::size_t nvars, std::size_t j);
  static LaurentPolynomial monomial(Exponent e, const Rational& c = 1);
  /// Combines like terms, drops zeros and sorts.
  static LaurentPolynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t num_vars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// All exponents nonnegative.
  bool is_polynomial() const;

  const Term& leading_term() const;
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;

  /// Componentwise minimum / maximum exponent over all terms (zeros for the
  /// zero polynomial).
  Exponent min_exponents() const;
  Exponent max_exponents() const;
  std::int64_t max_total_degree() const;
  std::int64_t min_total_degree() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const Rational& c);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const Rational& c) { return a *= c; }
  friend LaurentPolynomial operator*(const Rational& c, LaurentPolynomial a) { return a *= c; }

  LaurentPolynomial pow(std::uint64_t n) const;

  /// d/dx_j, with d/dx_j x^u = u_j x^(u - e_j).
  LaurentPolynomial derivative(std::size_t j) const;
  /// Multiplies by the monomial x^w.
  LaurentPolynomial shift(const Exponent& w) const;

  /// Evaluation at a rational point; throws DomainError when a variable with
  /// a negative exponent is set to zero.
  Rational evaluate(std::span<const Rational> point) const;

  /// Exact quotient q with q * d == *this, or nullopt when d does not divide.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& d) const;

  /// Replaces variable j by the polynomial p (which must have the same
  /// number of variables); only valid when x_j has nonnegative exponents.
  LaurentPolynomial substitute(std::size_t j, const LaurentPolynomial& p) const;

  /// Reinterprets the polynomial in a ring with more/fewer variables; the
  /// map sends old variable i to new variable index_map[i].
  LaurentPolynomial remap(std::size_t new_nvars, std::span<const std::size_t> index_map) const;

  /// Integer content c (positive leading coefficient convention) such that
  /// *this = c * primitive part with coprime integer coefficients.
  Rational content() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);
  /// Total order used to sort denominator factors canonically.
  friend int compare(const LaurentPolynomial& a, const LaurentPolynomial& b);

  /// Text in the expression grammar, variables named x1..xn.
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace gkz::exact

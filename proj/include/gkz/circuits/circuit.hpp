#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gkz/exactalg/laurent_polynomial.hpp"
#include "gkz/polytope/configuration.hpp"

namespace gkz::circuits {

using exact::Integer;
using exact::IntVector;
using exact::LaurentPolynomial;
using exact::Rational;
using polytope::Configuration;

/// A minimal integer dependence among the columns of a configuration. The
/// vector b has full length s, is primitive, vanishes off the support and has
/// a positive first nonzero entry.
struct Circuit {
  std::vector<std::size_t> support;
  IntVector b;
  Integer rho;

  /// Builds the circuit from any nonzero dependence vector (normalizes sign
  /// and content, derives support and rho).
  static Circuit from_vector(IntVector b);

  IntVector b_plus() const;
  IntVector b_minus() const;
  /// Restriction of b to its support.
  IntVector compressed() const;
};

/// Calls visit for every circuit of A, each exactly once, until visit returns
/// false. Circuits are produced by depth-first search over increasing
/// independent column sets.
void for_each_circuit(const Configuration& a, const std::function<bool(const Circuit&)>& visit);

/// All circuits of A sorted by support (lexicographically).
std::vector<Circuit> enumerate_circuits(const Configuration& a);

struct Balance {
  bool balanced = false;
  /// (i, j) with b_i = -b_j > 0, when balanced.
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  /// The first entry of the sorted positive/negated-negative lists that has
  /// no partner, when unbalanced.
  Integer unmatched;
};

Balance is_balanced(const Circuit& c);

/// The circuit discriminant x^{b_-} - lambda x^{b_+} with
/// lambda = (-1)^rho b_-^{b_-} / b_+^{b_+}, in variables x1..xs.
struct CircuitDiscriminant {
  Rational lambda;
  LaurentPolynomial rational_form;
  /// rational_form times the denominator of lambda: coprime integer
  /// coefficients with x^{b_-} carrying a positive coefficient.
  LaurentPolynomial integer_form;
};

CircuitDiscriminant circuit_discriminant(const Circuit& c);

/// Sum of (-1)^{rho n} x^{n b_+ - (n+1) b_-} for n = 0..N, the expansion of
/// 1/D for a balanced circuit. DomainError for unbalanced circuits.
LaurentPolynomial balanced_series(const Circuit& c, unsigned N);

/// Coefficient of x^{c + n b} in the canonical series attached to the
/// circuit and the offset c. DomainError when a factorial argument is
/// negative.
Rational canonical_coefficient(const Circuit& circuit, const IntVector& c, const Integer& n);

/// Both sides of prod_{b_i > 0} prod_{j=1}^{b_i} (n b_i + j) =
/// prod_{b_i < 0} prod_{j=1}^{-b_i} (-n b_i + j).
std::pair<Integer, Integer> product_identity_sides(const Circuit& c, const Integer& n);
bool product_identity_holds(const Circuit& c, const Integer& n);

/// The quotient mu(z) = gamma(z + 1) / gamma(z) of consecutive canonical
/// coefficients as a ratio of products of linear factors in z, summarized by
/// the order of mu summed over each residue class z0 + Z (z0 in [0, 1)).
struct OrderSum {
  Rational class_representative;
  long order = 0;
};
std::vector<OrderSum> coefficient_ratio_order_sums(const Circuit& circuit, const IntVector& c);

/// Closed form of the ratio gamma(n+1)/gamma(n) evaluated at integer n.
Rational coefficient_ratio(const Circuit& circuit, const IntVector& c, const Integer& n);

bool circuit_gkz_rational(const Circuit& c);

/// A configuration whose integer kernel is exactly Z b: rows form a basis of
/// the integer vectors orthogonal to b. Requires sum(b) = 0, b primitive and
/// at least three entries.
Configuration configuration_from_circuit(const IntVector& b);

}  // namespace gkz::circuits

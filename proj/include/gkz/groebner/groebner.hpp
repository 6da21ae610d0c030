#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkz/exactalg/laurent_polynomial.hpp"

namespace gkz::groebner {

using exact::Exponent;
using exact::LaurentPolynomial;
using exact::Rational;
using exact::Term;

enum class OrderKind { Grevlex, Lex, Elimination };

/// A monomial order on exponent vectors. Elimination(k) compares the first
/// k variables by graded reverse lexicographic order and breaks ties with
/// graded reverse lexicographic order on the remaining variables; every
/// monomial involving the first block is then larger than every monomial
/// free of it.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {OrderKind::Grevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::Elimination, k}; }

  /// Negative when a is the larger monomial (sorts first).
  int compare(const Exponent& a, const Exponent& b) const;
  std::string name() const;
};

/// Counter for reduction steps; throws BudgetExceeded past its limit.
class StepBudget {
 public:
  static constexpr std::uint64_t kDefault = 1000000;

  explicit StepBudget(std::uint64_t limit = kDefault) : limit_(limit) {}
  void spend(std::uint64_t n = 1);
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

class GroebnerBasis;

/// Polynomial with nonnegative exponents whose terms are sorted decreasingly
/// in a fixed monomial order.
class OrderedPolynomial {
 public:
  OrderedPolynomial(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}
  /// Throws DomainError if p has a negative exponent.
  OrderedPolynomial(const LaurentPolynomial& p, MonomialOrder order);

  std::size_t num_vars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading_term() const;
  const Exponent& leading_monomial() const { return leading_term().exponent; }

  /// *this -= c * x^m * g.
  void subtract_multiple(const Rational& c, const Exponent& m, const OrderedPolynomial& g);
  void make_monic();

  LaurentPolynomial to_laurent() const;
  std::string to_string() const { return to_laurent().to_string(); }

  friend bool operator==(const OrderedPolynomial& a, const OrderedPolynomial& b);

 private:
  friend class GroebnerBasis;
  friend GroebnerBasis buchberger(const std::vector<LaurentPolynomial>&, std::size_t, MonomialOrder, StepBudget&);
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// A reduced Groebner basis: monic generators, no term of any generator
/// divisible by the leading monomial of another, sorted by leading monomial
/// (largest first).
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  std::size_t num_vars() const noexcept { return nvars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<OrderedPolynomial>& generators() const noexcept { return gens_; }

  /// Unique remainder of p with no term divisible by any leading monomial.
  LaurentPolynomial normal_form(const LaurentPolynomial& p) const;
  OrderedPolynomial reduce(OrderedPolynomial p, StepBudget* budget = nullptr) const;

  bool contains(const LaurentPolynomial& p) const { return normal_form(p).is_zero(); }
  bool is_unit_ideal() const;

  /// True when some leading monomial is a pure power of variable i.
  bool has_pure_power(std::size_t i) const;
  /// Monomials outside the leading-term ideal; requires a pure power of
  /// every variable (zero-dimensional ideal), DomainError otherwise.
  std::vector<Exponent> standard_monomials() const;

 private:
  friend GroebnerBasis buchberger(const std::vector<LaurentPolynomial>&, std::size_t, MonomialOrder, StepBudget&);
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<OrderedPolynomial> gens_;
};

/// Buchberger's algorithm with the product and chain criteria, followed by
/// interreduction.
GroebnerBasis buchberger(const std::vector<LaurentPolynomial>& polys, std::size_t nvars, MonomialOrder order,
                         StepBudget& budget);
GroebnerBasis buchberger(const std::vector<LaurentPolynomial>& polys, std::size_t nvars,
                         MonomialOrder order = MonomialOrder::grevlex());

}  // namespace gkz::groebner

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gkz/cayley/cayley.hpp"
#include "gkz/exactalg/rational_function.hpp"
#include "gkz/groebner/groebner.hpp"
#include "gkz/weyl/weyl.hpp"

namespace gkz::residue {

using exact::Exponent;
using exact::LaurentPolynomial;
using exact::Rational;
using exact::RationalFunction;
using exact::RatVector;

/// Lattice points of m * Delta_r in Z^r, sorted by coordinate sum and then
/// with larger leading coordinates first: for r = 2, m = 1 the order is
/// (0,0), (1,0), (0,1).
std::vector<Exponent> simplex_points(std::size_t r, std::int64_t m);

/// Lattice points of the interior of (r+1) m * Delta_r: every coordinate at
/// least 1 and coordinate sum at most (r+1) m - 1. Same order as above.
std::vector<Exponent> interior_exponents(std::size_t r, std::int64_t m);

/// Laurent polynomials f_0, ..., f_r on m * Delta_r with exact coefficients:
/// coeffs[j][k] multiplies t^{simplex_points(r, m)[k]} in f_j.
struct ResidueProblem {
  std::size_t r = 1;
  std::int64_t m = 1;
  std::vector<RatVector> coeffs;
  Exponent a;
};

/// Determinant of the Sylvester matrix of f = sum f[k] t^k and
/// g = sum g[k] t^k (coefficients listed by increasing power, leading rows
/// filled from the highest power), so Res = lc(f)^deg g lc(g)^deg f
/// prod (alpha_i - beta_j). Coefficients live in a common ring of nvars
/// variables; both degrees must be at least 1.
LaurentPolynomial sylvester_resultant(const std::vector<LaurentPolynomial>& f, const std::vector<LaurentPolynomial>& g,
                                      std::size_t nvars);
Rational sylvester_resultant(const RatVector& f, const RatVector& g);

/// Generic forms on m * Delta_r with one coefficient variable per
/// (form, lattice point): variable j * N + k multiplies t^{point k} in f_j,
/// where N = |m * Delta_r|. The t_i are the last r variables of the ring.
struct GenericForms {
  std::vector<LaurentPolynomial> forms;
  std::size_t coefficient_vars = 0;
  std::size_t r = 0;
  std::int64_t m = 0;
};
GenericForms symbolic_forms(std::size_t r, std::int64_t m);

/// det of the matrix with first row (f_0, ..., f_r) and row i equal to
/// (t_i df_0/dt_i, ..., t_i df_r/dt_i). The forms live in a ring whose last
/// r variables are t_1..t_r. Throws std::logic_error if the t-support of
/// the result leaves Int((r+1) m Delta_r).
LaurentPolynomial toric_jacobian(const std::vector<LaurentPolynomial>& forms, std::size_t r, std::int64_t m);

/// m j(t) / (t_1 ... t_r) homogenized to degree (r+1)(m-1) in u_0..u_r with
/// t_i = u_i / u_0. The t variables (the last r) are replaced by the r + 1
/// u variables, appended after the coefficient variables.
LaurentPolynomial homogenized_jacobian(const LaurentPolynomial& j, std::size_t r, std::int64_t m);

/// Global residues Res(t^a) for one instance with rational coefficients.
///
/// The forms F_j are homogenized to degree m in u_0..u_r and a Groebner
/// basis G of (F_0, ..., F_r) is computed. The quotient ring is zero beyond
/// degree (r+1)(m-1) and one dimensional there, so the normal forms of
/// u^{a'} (the homogenization of t^{a-1}) and of the homogenized Jacobian J
/// are multiples of a single standard monomial. The residue is
/// m^{r+1} NF(u^{a'}) / NF(J), which is the normalization
/// Res(j(t)) = m^r = r! vol(m Delta_r).
class ToricResidue {
 public:
  /// DegenerateInstance when the forms have a common projective zero.
  ToricResidue(const ResidueProblem& problem, groebner::MonomialOrder order, groebner::StepBudget& budget);
  explicit ToricResidue(const ResidueProblem& problem,
                        groebner::MonomialOrder order = groebner::MonomialOrder::grevlex());

  /// InvalidInput unless a is interior.
  Rational residue(const Exponent& a) const;
  /// sum_a j_a Res(t^a) over the monomials of the Jacobian of this instance.
  Rational jacobian_residue() const;
  /// r! vol(m Delta_r) = m^r.
  Rational calibration_constant() const;

  const Exponent& socle() const noexcept { return socle_; }
  const groebner::GroebnerBasis& basis() const noexcept { return basis_; }
  const LaurentPolynomial& jacobian() const noexcept { return jacobian_; }

 private:
  Rational socle_coefficient(const LaurentPolynomial& p) const;

  std::size_t r_;
  std::int64_t m_;
  groebner::GroebnerBasis basis_;
  LaurentPolynomial jacobian_;
  Exponent socle_;
  Rational jacobian_socle_;
};

Rational toric_residue(const ResidueProblem& problem);

/// Sum over the roots xi of f_i of the residues of t^a / (f_0 f_1) dt/t,
/// times (-1)^i, computed as the trace of multiplication by
/// t^{a-1} / (f_{1-i} f_i') on Q[t]/(f_i). Coefficients by increasing power.
/// DomainError when f_0 and f_1 share a root or f_i(0) = 0.
Rational univariate_residue_oracle(const RatVector& f0, const RatVector& f1, std::int64_t a, int i = 0);

struct ResidueWitness {
  /// Res(t^a) as a function of x_1..x_{2m+2}: f_0 = x_1 + x_2 t + ... and
  /// f_1 = x_{m+2} + x_{m+3} t + ....
  RationalFunction function;
  /// Sylvester resultant of the generic f_0, f_1 (the known denominator).
  LaurentPolynomial resultant;
  std::size_t samples = 0;
  weyl::Certificate certificate;
};

/// Interpolates the numerator P of Res(t^a) = P / Res(f_0, f_1) on the
/// segment [0, m] (1 <= m <= 3, 1 <= a <= 2m - 1) from exact residues at
/// pseudo-random rational instances, checks it on fresh instances and
/// certifies it with verify_hypergeometric. std::logic_error on a failed
/// check or certification.
ResidueWitness residue_witness(std::int64_t m, std::int64_t a, std::uint64_t seed = 1);

/// Same, for an essential Cayley structure with r = 1 whose two factors are
/// both all lattice points of a segment [0, m]. InvalidInput otherwise.
ResidueWitness residue_witness(const cayley::CayleyStructure& cs, std::int64_t a, std::uint64_t seed = 1);

}  // namespace gkz::residue

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkz/exactalg/rational_function.hpp"
#include "gkz/groebner/groebner.hpp"
#include "gkz/polytope/configuration.hpp"

namespace gkz::weyl {

using exact::Exponent;
using exact::Integer;
using exact::IntVector;
using exact::LaurentPolynomial;
using exact::Rational;
using exact::RationalFunction;
using exact::RatVector;
using polytope::Configuration;

/// The operator d^u - d^v with A u = A v, u and v of disjoint support.
struct ToricBinomialOp {
  Exponent u;
  Exponent v;

  /// "d1*d2 - d3*d4" style text.
  std::string to_string() const;
};

/// sum_j a_ij x_j d_j (the constant beta_i is supplied separately).
struct EulerOp {
  std::size_t row = 0;
  IntVector coefficients;
};

enum class ToricMethod { Saturation, Bounded };

struct ToricGenerators {
  std::vector<ToricBinomialOp> ops;
  ToricMethod method = ToricMethod::Saturation;
  /// False for the bounded method, which only under-approximates I_A.
  bool generates_ideal = true;
};

/// Generators of the toric ideal I_A.
///
/// Saturation: the binomials of a kernel lattice basis together with
/// t x_1 ... x_s - 1, a Groebner basis for an order eliminating t, and the
/// t-free elements of that basis. Bounded: one binomial for every primitive
/// kernel vector (first nonzero entry positive) of 1-norm at most bound.
ToricGenerators toric_ideal_generators(const Configuration& a, ToricMethod method, groebner::StepBudget& budget,
                                       unsigned bound = 4);
ToricGenerators toric_ideal_generators(const Configuration& a, ToricMethod method = ToricMethod::Saturation,
                                       unsigned bound = 4);

/// The binomial x^u - x^v as a polynomial in s variables.
LaurentPolynomial binomial(const ToricBinomialOp& op);

std::vector<EulerOp> euler_operators(const Configuration& a);

/// d^u f for a nonnegative exponent vector u.
RationalFunction apply_derivatives(const Exponent& u, const RationalFunction& f);

/// d^u f - d^v f.
RationalFunction apply_toric(const ToricBinomialOp& op, const RationalFunction& f);

/// sum_j a_ij x_j d_j f.
RationalFunction apply_euler(const EulerOp& op, const RationalFunction& f);

/// The vector beta with E_i f = beta_i f for every row i, if it exists.
/// DomainError when f is zero.
std::optional<RatVector> homogeneity_degree(const Configuration& a, const RationalFunction& f);

enum class CertificateStatus { Certified, Refuted };

struct Certificate {
  CertificateStatus status = CertificateStatus::Refuted;
  std::optional<RatVector> beta;
  std::size_t generators = 0;
  /// Set when a toric generator fails to annihilate f.
  std::optional<ToricBinomialOp> counterexample;
  /// Nonzero residual d^u f - d^v f of the counterexample.
  std::optional<RationalFunction> residual;
  /// Set when f is not A-homogeneous: the first Euler row with no constant.
  std::optional<std::size_t> inhomogeneous_row;

  bool certified() const noexcept { return status == CertificateStatus::Certified; }
};

/// Certifies that f is A-hypergeometric: f is A-homogeneous and every
/// saturation generator of I_A annihilates f. Because the d_j commute, the
/// generators annihilating f implies the whole left ideal does.
Certificate verify_hypergeometric(const Configuration& a, const RationalFunction& f, groebner::StepBudget& budget);
Certificate verify_hypergeometric(const Configuration& a, const RationalFunction& f);

/// Coefficient F(m, n) = (p(m+n+k)-1)! (q(m+n+k)-1)! / ((np)! (nq)! (mp)! (mq)!)
/// of the octahedron series. InvalidInput unless p, q are coprime positive,
/// k >= 1 and m, n >= 0.
Rational octahedron_coefficient(long p, long q, long k, long m, long n);

/// The closed forms of R(m+a, n+b) = F(m+a+1, n+b) / F(m+a, n+b) and
/// S(m+a, n+b) = F(m+a, n+b+1) / F(m+a, n+b) as products of linear factors.
std::pair<Rational, Rational> octahedron_quotients(long p, long q, long k, long m, long n, long a, long b);

}  // namespace gkz::weyl

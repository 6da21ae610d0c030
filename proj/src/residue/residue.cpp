#include "gkz/residue/residue.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "gkz/errors.hpp"
#include "gkz/exactalg/poly_matrix.hpp"

namespace gkz::residue {

namespace {

using exact::Integer;

std::int64_t degree_of(const Exponent& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

void lattice_points(std::size_t r, std::int64_t lo, std::int64_t total, Exponent& prefix, std::vector<Exponent>& out) {
  if (prefix.size() == r) {
    out.push_back(prefix);
    return;
  }
  std::int64_t used = degree_of(prefix);
  for (std::int64_t x = lo; used + x <= total; ++x) {
    prefix.push_back(x);
    lattice_points(r, lo, total, prefix, out);
    prefix.pop_back();
  }
}

void sort_points(std::vector<Exponent>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Exponent& a, const Exponent& b) {
    std::int64_t da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return a > b;
  });
}

Rational rational_determinant(std::vector<RatVector> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

// Dense univariate polynomials over Q, coefficients by increasing power.
namespace uni {

using Poly = RatVector;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

/// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * Rational(static_cast<long>(k)));
  trim(out);
  return out;
}

/// s with s * g = 1 modulo f, or nullopt when gcd(f, g) is not constant.
std::optional<Poly> inverse_mod(const Poly& g, const Poly& f) {
  Poly r0 = f, r1 = mod(g, f);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;
  Poly out = mod(s0, f);
  for (auto& c : out) c /= r0[0];
  return out;
}

}  // namespace uni

Rational power(const Rational& x, std::size_t n) {
  Rational out = 1;
  for (std::size_t k = 0; k < n; ++k) out *= x;
  return out;
}

std::vector<LaurentPolynomial> numeric_forms(const ResidueProblem& p, const std::vector<Exponent>& pts) {
  std::vector<LaurentPolynomial> out;
  for (const auto& row : p.coeffs) {
    std::vector<exact::Term> terms;
    for (std::size_t k = 0; k < pts.size(); ++k) terms.push_back({pts[k], row[k]});
    out.push_back(LaurentPolynomial::from_terms(p.r, std::move(terms)));
  }
  return out;
}

void check_interior(std::size_t r, std::int64_t m, const Exponent& a) {
  if (a.size() != r) throw InvalidInput("exponent must have " + std::to_string(r) + " entries");
  for (auto x : a)
    if (x < 1) throw InvalidInput("exponent is not interior: every coordinate must be at least 1");
  if (degree_of(a) > static_cast<std::int64_t>(r + 1) * m - 1)
    throw InvalidInput("exponent is not interior: coordinate sum exceeds (r+1)m - 1");
}

groebner::StepBudget& lvalue(groebner::StepBudget&& b) { return b; }

}  // namespace

std::vector<Exponent> simplex_points(std::size_t r, std::int64_t m) {
  if (m < 1) throw InvalidInput("the dilation m must be positive");
  std::vector<Exponent> out;
  Exponent prefix;
  lattice_points(r, 0, m, prefix, out);
  sort_points(out);
  return out;
}

std::vector<Exponent> interior_exponents(std::size_t r, std::int64_t m) {
  if (m < 1) throw InvalidInput("the dilation m must be positive");
  std::vector<Exponent> out;
  Exponent prefix;
  lattice_points(r, 1, static_cast<std::int64_t>(r + 1) * m - 1, prefix, out);
  sort_points(out);
  return out;
}

LaurentPolynomial sylvester_resultant(const std::vector<LaurentPolynomial>& f, const std::vector<LaurentPolynomial>& g,
                                      std::size_t nvars) {
  if (f.size() < 2 || g.size() < 2) throw InvalidInput("sylvester_resultant needs degrees of at least 1");
  const std::size_t p = f.size() - 1, q = g.size() - 1, n = p + q;
  exact::PolyMatrix m(n, std::vector<LaurentPolynomial>(n, LaurentPolynomial(nvars)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = 0; k <= p; ++k) m[i][i + k] = f[p - k];
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k <= q; ++k) m[q + i][i + k] = g[q - k];
  return exact::determinant(m, nvars);
}

Rational sylvester_resultant(const RatVector& f, const RatVector& g) {
  if (f.size() < 2 || g.size() < 2) throw InvalidInput("sylvester_resultant needs degrees of at least 1");
  const std::size_t p = f.size() - 1, q = g.size() - 1, n = p + q;
  std::vector<RatVector> m(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k = 0; k <= p; ++k) m[i][i + k] = f[p - k];
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k <= q; ++k) m[q + i][i + k] = g[q - k];
  return rational_determinant(std::move(m));
}

GenericForms symbolic_forms(std::size_t r, std::int64_t m) {
  auto pts = simplex_points(r, m);
  const std::size_t n = pts.size();
  GenericForms out;
  out.coefficient_vars = (r + 1) * n;
  out.r = r;
  out.m = m;
  const std::size_t nvars = out.coefficient_vars + r;
  for (std::size_t j = 0; j <= r; ++j) {
    std::vector<exact::Term> terms;
    for (std::size_t k = 0; k < n; ++k) {
      Exponent e(nvars, 0);
      e[j * n + k] = 1;
      for (std::size_t i = 0; i < r; ++i) e[out.coefficient_vars + i] = pts[k][i];
      terms.push_back({std::move(e), Rational(1)});
    }
    out.forms.push_back(LaurentPolynomial::from_terms(nvars, std::move(terms)));
  }
  return out;
}

LaurentPolynomial toric_jacobian(const std::vector<LaurentPolynomial>& forms, std::size_t r, std::int64_t m) {
  if (forms.size() != r + 1) throw InvalidInput("toric_jacobian needs r + 1 forms");
  const std::size_t nvars = forms.front().num_vars();
  if (nvars < r) throw InvalidInput("forms must include the variables t_1..t_r");
  const std::size_t base = nvars - r;
  exact::PolyMatrix mat(r + 1, std::vector<LaurentPolynomial>(r + 1));
  for (std::size_t j = 0; j <= r; ++j) {
    mat[0][j] = forms[j];
    for (std::size_t i = 1; i <= r; ++i) {
      Exponent shift(nvars, 0);
      shift[base + i - 1] = 1;
      mat[i][j] = forms[j].derivative(base + i - 1).shift(shift);
    }
  }
  LaurentPolynomial j = exact::determinant(mat, nvars);
  const std::int64_t top = static_cast<std::int64_t>(r + 1) * m - 1;
  for (const auto& t : j.terms()) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (t.exponent[base + i] < 1) throw std::logic_error("toric Jacobian has a term off the interior");
      sum += t.exponent[base + i];
    }
    if (sum > top) throw std::logic_error("toric Jacobian has a term off the interior");
  }
  return j;
}

LaurentPolynomial homogenized_jacobian(const LaurentPolynomial& j, std::size_t r, std::int64_t m) {
  const std::size_t nin = j.num_vars();
  const std::size_t prefix = nin - r;
  const std::size_t nout = prefix + r + 1;
  const std::int64_t top = static_cast<std::int64_t>(r + 1) * (m - 1);
  std::vector<exact::Term> terms;
  for (const auto& t : j.terms()) {
    Exponent e(nout, 0);
    std::copy(t.exponent.begin(), t.exponent.begin() + static_cast<std::ptrdiff_t>(prefix), e.begin());
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < r; ++i) {
      e[prefix + 1 + i] = t.exponent[prefix + i] - 1;
      sum += e[prefix + 1 + i];
    }
    e[prefix] = top - sum;
    terms.push_back({std::move(e), t.coeff * Rational(m)});
  }
  return LaurentPolynomial::from_terms(nout, std::move(terms));
}

ToricResidue::ToricResidue(const ResidueProblem& problem, groebner::MonomialOrder order, groebner::StepBudget& budget)
    : r_(problem.r), m_(problem.m), basis_(problem.r + 1, order) {
  auto pts = simplex_points(r_, m_);
  if (problem.coeffs.size() != r_ + 1) throw InvalidInput("residue problem needs r + 1 coefficient rows");
  for (const auto& row : problem.coeffs)
    if (row.size() != pts.size())
      throw InvalidInput("each coefficient row needs " + std::to_string(pts.size()) + " entries");

  const std::size_t nu = r_ + 1;
  std::vector<LaurentPolynomial> homogeneous;
  for (const auto& row : problem.coeffs) {
    std::vector<exact::Term> terms;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      Exponent e(nu, 0);
      e[0] = m_ - degree_of(pts[k]);
      for (std::size_t i = 0; i < r_; ++i) e[i + 1] = pts[k][i];
      terms.push_back({std::move(e), row[k]});
    }
    homogeneous.push_back(LaurentPolynomial::from_terms(nu, std::move(terms)));
  }
  basis_ = groebner::buchberger(homogeneous, nu, order, budget);
  for (std::size_t i = 0; i < nu; ++i)
    if (!basis_.has_pure_power(i)) throw DegenerateInstance("degenerate instance: the forms have a common zero");

  jacobian_ = toric_jacobian(numeric_forms(problem, pts), r_, m_);
  const std::int64_t top = static_cast<std::int64_t>(nu) * (m_ - 1);
  bool found = false;
  for (const auto& e : basis_.standard_monomials()) {
    if (degree_of(e) != top) continue;
    if (found) throw std::logic_error("quotient ring is not one dimensional in the socle degree");
    socle_ = e;
    found = true;
  }
  if (!found) throw std::logic_error("quotient ring has no socle monomial");
  jacobian_socle_ = socle_coefficient(homogenized_jacobian(jacobian_, r_, m_));
  if (jacobian_socle_ == 0) throw DegenerateInstance("degenerate instance: the toric Jacobian vanishes in the quotient");
}

ToricResidue::ToricResidue(const ResidueProblem& problem, groebner::MonomialOrder order)
    : ToricResidue(problem, order, lvalue(groebner::StepBudget{})) {}

Rational ToricResidue::socle_coefficient(const LaurentPolynomial& p) const {
  LaurentPolynomial nf = basis_.normal_form(p);
  if (nf.is_zero()) return 0;
  if (nf.size() != 1 || nf.terms().front().exponent != socle_)
    throw std::logic_error("normal form in the socle degree is not a multiple of the socle monomial");
  return nf.terms().front().coeff;
}

Rational ToricResidue::residue(const Exponent& a) const {
  check_interior(r_, m_, a);
  const std::int64_t top = static_cast<std::int64_t>(r_ + 1) * (m_ - 1);
  Exponent e(r_ + 1, 0);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < r_; ++i) {
    e[i + 1] = a[i] - 1;
    sum += a[i] - 1;
  }
  e[0] = top - sum;
  return power(Rational(m_), r_ + 1) * socle_coefficient(LaurentPolynomial::monomial(e)) / jacobian_socle_;
}

Rational ToricResidue::jacobian_residue() const {
  Rational total = 0;
  for (const auto& t : jacobian_.terms()) total += t.coeff * residue(t.exponent);
  return total;
}

Rational ToricResidue::calibration_constant() const { return power(Rational(m_), r_); }

Rational toric_residue(const ResidueProblem& problem) { return ToricResidue(problem).residue(problem.a); }

Rational univariate_residue_oracle(const RatVector& f0, const RatVector& f1, std::int64_t a, int i) {
  if (i != 0 && i != 1) throw InvalidInput("the index i must be 0 or 1");
  uni::Poly fi = i == 0 ? f1 : f0;
  uni::Poly other = i == 0 ? f0 : f1;
  uni::trim(fi);
  uni::trim(other);
  if (fi.size() < 2) throw DomainError("the polynomial whose roots are summed must have positive degree");
  if (fi[0] == 0) throw DomainError("root at t = 0: pole on the torus boundary");
  auto inv_other = uni::inverse_mod(other, fi);
  if (!inv_other) throw DomainError("f0 and f1 have a common root (resultant zero)");
  auto inv_prime = uni::inverse_mod(uni::derivative(fi), fi);
  if (!inv_prime) throw DomainError("repeated root: f_i and its derivative share a root");
  uni::Poly monomial{Rational(1)};
  if (a >= 1) {
    monomial.assign(static_cast<std::size_t>(a), Rational(0));
    monomial.back() = 1;
  } else {
    auto inv_t = *uni::inverse_mod(uni::Poly{Rational(0), Rational(1)}, fi);
    for (std::int64_t k = a; k < 1; ++k) monomial = uni::mod(uni::mul(monomial, inv_t), fi);
  }
  uni::Poly h = uni::mod(uni::mul(uni::mod(uni::mul(monomial, *inv_other), fi), *inv_prime), fi);
  const std::size_t n = fi.size() - 1;
  Rational trace = 0;
  uni::Poly basis{Rational(1)};
  for (std::size_t k = 0; k < n; ++k) {
    uni::Poly image = uni::mod(uni::mul(h, basis), fi);
    if (k < image.size()) trace += image[k];
    basis.insert(basis.begin(), Rational(0));
  }
  return i == 0 ? trace : Rational(-trace);
}

ResidueWitness residue_witness(std::int64_t m, std::int64_t a, std::uint64_t seed) {
  if (m < 1 || m > 3) throw InvalidInput("residue_witness supports segments [0, m] with 1 <= m <= 3");
  check_interior(1, m, Exponent{a});
  const std::size_t n = static_cast<std::size_t>(m) + 1;
  const std::size_t nvars = 2 * n;

  std::vector<LaurentPolynomial> f0, f1;
  for (std::size_t k = 0; k < n; ++k) {
    f0.push_back(LaurentPolynomial::variable(nvars, k));
    f1.push_back(LaurentPolynomial::variable(nvars, n + k));
  }
  ResidueWitness out;
  out.resultant = sylvester_resultant(f0, f1, nvars);

  // numerator has degree m - 1 in each group of coefficients
  std::vector<Exponent> left, right;
  {
    std::vector<Exponent> all;
    Exponent prefix;
    lattice_points(n, 0, m - 1, prefix, all);
    for (const auto& e : all)
      if (degree_of(e) == m - 1) left.push_back(e);
  }
  right = left;
  std::vector<Exponent> monomials;
  for (const auto& l : left)
    for (const auto& rr : right) {
      Exponent e(l);
      e.insert(e.end(), rr.begin(), rr.end());
      monomials.push_back(std::move(e));
    }
  const std::size_t unknowns = monomials.size();

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coin(-12, 12);
  auto sample = [&](RatVector& point, Rational& value) {
    for (;;) {
      point.assign(nvars, Rational(0));
      for (auto& x : point) x = coin(rng);
      RatVector c0(point.begin(), point.begin() + static_cast<std::ptrdiff_t>(n));
      RatVector c1(point.begin() + static_cast<std::ptrdiff_t>(n), point.end());
      if (c0.back() == 0 || c1.back() == 0 || sylvester_resultant(c0, c1) == 0) continue;
      ResidueProblem prob{1, m, {c0, c1}, {a}};
      try {
        value = toric_residue(prob);
      } catch (const DegenerateInstance&) {
        continue;
      }
      return;
    }
  };

  // rows: [monomial values | residue * resultant]
  std::vector<RatVector> rows;
  const std::size_t target = unknowns + 8;
  while (rows.size() < target) {
    RatVector point;
    Rational value;
    sample(point, value);
    RatVector row;
    for (const auto& e : monomials) row.push_back(LaurentPolynomial::monomial(e).evaluate(point));
    row.push_back(value * out.resultant.evaluate(point));
    rows.push_back(std::move(row));
  }
  out.samples = rows.size();

  // reduced row echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < unknowns && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    Rational lead = rows[rank][col];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      Rational f = rows[i][col];
      for (std::size_t j = col; j <= unknowns; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  if (rank < unknowns) throw DomainError("interpolation degree bound exceeded: sample system is rank deficient");
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i][unknowns] != 0) throw std::logic_error("residue samples are inconsistent with the degree bound");

  std::vector<exact::Term> terms;
  for (std::size_t k = 0; k < rank; ++k) terms.push_back({monomials[pivots[k]], rows[k][unknowns]});
  LaurentPolynomial numerator = LaurentPolynomial::from_terms(nvars, std::move(terms));
  out.function = RationalFunction(numerator, {{out.resultant, 1}});

  for (int check = 0; check < 5; ++check) {
    RatVector point;
    Rational value;
    sample(point, value);
    if (out.function.evaluate(point) != value) throw std::logic_error("interpolated residue fails a fresh sample");
  }

  std::vector<exact::IntMatrix> factors(2, exact::IntMatrix(1, n));
  for (std::size_t k = 0; k < n; ++k) factors[0](0, k) = factors[1](0, k) = static_cast<long>(k);
  auto config = cayley::cayley_configuration(factors);
  out.certificate = weyl::verify_hypergeometric(config, out.function);
  if (!out.certificate.certified()) throw std::logic_error("residue witness failed hypergeometric certification");
  return out;
}

ResidueWitness residue_witness(const cayley::CayleyStructure& cs, std::int64_t a, std::uint64_t seed) {
  if (cs.r != 1) throw InvalidInput("residue witnesses need a Cayley structure with two factors");
  const auto& f0 = cs.factors[0];
  const auto& f1 = cs.factors[1];
  if (!(f0 == f1)) throw InvalidInput("residue witnesses need two equal segment factors");
  std::vector<long> values;
  for (std::size_t c = 0; c < f0.cols(); ++c) values.push_back(f0(0, c).get_si());
  std::vector<long> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<long>(k)) throw InvalidInput("factors must be all lattice points of a segment [0, m]");
  if (values != sorted) throw InvalidInput("factor points must be listed in increasing order");
  return residue_witness(static_cast<std::int64_t>(sorted.size()) - 1, a, seed);
}

}  // namespace gkz::residue

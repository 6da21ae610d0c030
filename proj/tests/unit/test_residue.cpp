#include <doctest.h>

#include <random>

#include "gkz/errors.hpp"
#include "gkz/exactalg/parser.hpp"
#include "gkz/residue/residue.hpp"

using namespace gkz;
using namespace gkz::residue;
using exact::parse_expression;

namespace {

const char* kResultant =
    "x1^2*x6^2 - x1*x2*x5*x6 - 2*x1*x3*x4*x6 + x1*x3*x5^2 + x2^2*x4*x6 - x2*x3*x4*x5 + x3^2*x4^2";

RatVector rats(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RatVector random_row(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-9, 9);
  RatVector out;
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(d(rng));
  return out;
}

/// Product formula lc(f)^q lc(g)^p prod (alpha - beta) for f, g given by roots.
Rational product_formula(const Rational& lf, const RatVector& alpha, const Rational& lg, const RatVector& beta) {
  Rational out = 1;
  for (std::size_t k = 0; k < beta.size(); ++k) out *= lf;
  for (std::size_t k = 0; k < alpha.size(); ++k) out *= lg;
  for (const auto& a : alpha)
    for (const auto& b : beta) out *= a - b;
  return out;
}

RatVector from_roots(const Rational& lc, const RatVector& roots) {
  RatVector p{lc};
  for (const auto& r : roots) {
    RatVector next(p.size() + 1, Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = next;
  }
  return p;
}

}  // namespace

TEST_CASE("simplex points and interior exponents") {
  auto pts = simplex_points(2, 1);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Exponent{0, 0});
  CHECK(pts[1] == Exponent{1, 0});
  CHECK(pts[2] == Exponent{0, 1});
  CHECK(simplex_points(1, 3).size() == 4);
  CHECK(simplex_points(2, 2).size() == 6);
  CHECK(interior_exponents(1, 2) == std::vector<Exponent>{{1}, {2}, {3}});
  CHECK(interior_exponents(2, 1) == std::vector<Exponent>{{1, 1}});
  CHECK(interior_exponents(2, 2).size() == 10);
  CHECK_THROWS_AS(simplex_points(1, 0), InvalidInput);
}

TEST_CASE("Sylvester resultant") {
  std::vector<LaurentPolynomial> f0, f1;
  for (std::size_t k = 0; k < 3; ++k) {
    f0.push_back(LaurentPolynomial::variable(6, k));
    f1.push_back(LaurentPolynomial::variable(6, 3 + k));
  }
  CHECK(sylvester_resultant(f0, f1, 6) == parse_expression(kResultant, 6).numerator());

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    RatVector alpha{Rational(d(rng))}, beta{Rational(d(rng)), Rational(d(rng))};
    if (trial % 3 == 0) {
      Rational q(d(rng), 5);
      q.canonicalize();
      alpha.push_back(q);
    }
    Rational lf = d(rng) == 0 ? 3 : 2, lg = -1;
    if (trial % 4 == 0) beta[0] = alpha[0];
    Rational expected = product_formula(lf, alpha, lg, beta);
    CHECK(sylvester_resultant(from_roots(lf, alpha), from_roots(lg, beta)) == expected);
  }
  CHECK(sylvester_resultant(rats({-1, 1}), rats({-2, 0, 2})) == 0);
  CHECK_THROWS_AS(sylvester_resultant(rats({1}), rats({1, 1})), InvalidInput);
}

TEST_CASE("toric Jacobians") {
  GenericForms g = symbolic_forms(1, 2);
  REQUIRE(g.coefficient_vars == 6);
  auto j = toric_jacobian(g.forms, 1, 2);
  auto expected_j = parse_expression("(x1*x5 - x2*x4)*x7 + 2*(x1*x6 - x3*x4)*x7^2 + (x2*x6 - x3*x5)*x7^3", 7);
  CHECK(j == expected_j.numerator());
  auto big_j = homogenized_jacobian(j, 1, 2);
  auto displayed_j = parse_expression(
      "2*(x1*x5 - x2*x4)*x7^2 + 4*(x1*x6 - x3*x4)*x7*x8 + 2*(x2*x6 - x3*x5)*x8^2", 8);
  CHECK(big_j == displayed_j.numerator());

  GenericForms lin = symbolic_forms(2, 1);
  auto j2 = toric_jacobian(lin.forms, 2, 1);
  auto det = parse_expression("x1*(x5*x9 - x6*x8) - x2*(x4*x9 - x6*x7) + x3*(x4*x8 - x5*x7)", 11).numerator();
  CHECK(j2 == det * LaurentPolynomial::variable(11, 9) * LaurentPolynomial::variable(11, 10));
}

TEST_CASE("residues agree with the univariate oracle") {
  std::mt19937_64 rng(11);
  int compared = 0;
  for (std::int64_t m : {1, 2, 3}) {
    for (int trial = 0; trial < 12; ++trial) {
      ResidueProblem p{1, m, {random_row(rng, m + 1), random_row(rng, m + 1)}, {}};
      if (p.coeffs[0].back() == 0 || p.coeffs[1].back() == 0 || p.coeffs[1][0] == 0 || p.coeffs[0][0] == 0) continue;
      if (sylvester_resultant(p.coeffs[0], p.coeffs[1]) == 0) continue;
      ToricResidue res(p);
      for (const auto& a : interior_exponents(1, m)) {
        Rational oracle;
        try {
          oracle = univariate_residue_oracle(p.coeffs[0], p.coeffs[1], a[0], 0);
        } catch (const DomainError&) {
          continue;
        }
        CHECK(res.residue(a) == oracle);
        CHECK(univariate_residue_oracle(p.coeffs[0], p.coeffs[1], a[0], 1) == oracle);
        ++compared;
      }
      CHECK(res.jacobian_residue() == res.calibration_constant());
    }
  }
  CHECK(compared > 30);
}

TEST_CASE("residue normalizations and invariances") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    ResidueProblem p{2, 1, {random_row(rng, 3), random_row(rng, 3), random_row(rng, 3)}, {1, 1}};
    std::vector<RatVector> rows = p.coeffs;
    Rational det = rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
                   rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
                   rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
    if (det == 0) {
      CHECK_THROWS_AS(ToricResidue{p}, DegenerateInstance);
      continue;
    }
    CHECK(toric_residue(p) == 1 / det);
  }

  for (int trial = 0; trial < 4; ++trial) {
    ResidueProblem p{2, 2, {random_row(rng, 6), random_row(rng, 6), random_row(rng, 6)}, {}};
    ToricResidue grevlex(p);
    ToricResidue lex(p, groebner::MonomialOrder::lex());
    CHECK(grevlex.jacobian_residue() == 4);
    for (const auto& a : interior_exponents(2, 2)) CHECK(grevlex.residue(a) == lex.residue(a));

    ResidueProblem scaled = p;
    for (auto& c : scaled.coeffs[1]) c *= 3;
    ToricResidue s(scaled);
    for (const auto& a : interior_exponents(2, 2)) CHECK(s.residue(a) == grevlex.residue(a) / 3);
  }
}

TEST_CASE("the quadrics residue is the hypergeometric quotient") {
  auto f = parse_expression(std::string("(x1*x6 - x3*x4)/(") + kResultant + ")", 6);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    ResidueProblem p{1, 2, {random_row(rng, 3), random_row(rng, 3)}, {2}};
    RatVector x = p.coeffs[0];
    x.insert(x.end(), p.coeffs[1].begin(), p.coeffs[1].end());
    Rational r = sylvester_resultant(p.coeffs[0], p.coeffs[1]);
    if (r == 0) {
      CHECK_THROWS_AS(toric_residue(p), DegenerateInstance);
      continue;
    }
    CHECK(toric_residue(p) == f.evaluate(x));
  }
}

TEST_CASE("invalid and degenerate residue inputs") {
  ResidueProblem p{1, 2, {rats({1, 0, 1}), rats({2, 1, 1})}, {0}};
  CHECK_THROWS_AS(toric_residue(p), InvalidInput);
  p.a = {4};
  CHECK_THROWS_AS(toric_residue(p), InvalidInput);
  ResidueProblem common{1, 1, {rats({1, 1}), rats({2, 2})}, {1}};
  CHECK_THROWS_AS(toric_residue(common), DegenerateInstance);
  CHECK_THROWS_AS(univariate_residue_oracle(rats({1, 1}), rats({2, 2}), 1), DomainError);
  CHECK_THROWS_AS(univariate_residue_oracle(rats({1, 1}), rats({0, 2}), 1), DomainError);
  ResidueProblem short_row{1, 2, {rats({1, 0}), rats({2, 1, 1})}, {1}};
  CHECK_THROWS_AS(ToricResidue{short_row}, InvalidInput);
}

TEST_CASE("residue witnesses") {
  auto w = residue_witness(2, 2);
  CHECK(w.function == parse_expression(std::string("(x1*x6 - x3*x4)/(") + kResultant + ")", 6));
  CHECK(w.certificate.certified());
  CHECK(w.samples >= 9);

  auto w1 = residue_witness(1, 1);
  CHECK(w1.function == parse_expression("1/(x1*x4 - x2*x3)", 4));
  CHECK(w1.certificate.certified());

  for (std::int64_t a : {1, 3}) CHECK(residue_witness(2, a, 9).certificate.certified());
  CHECK(residue_witness(3, 3).certificate.certified());
  CHECK_THROWS_AS(residue_witness(4, 1), InvalidInput);
  CHECK_THROWS_AS(residue_witness(2, 4), InvalidInput);
}

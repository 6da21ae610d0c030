#include "gkz/weyl/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "gkz/errors.hpp"
#include "gkz/exactalg/int_matrix.hpp"

namespace gkz::weyl {

namespace {

void split(const IntVector& b, Exponent& plus, Exponent& minus) {
  plus.assign(b.size(), 0);
  minus.assign(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] > 0) plus[j] = exact::to_exponent(b[j]);
    if (b[j] < 0) minus[j] = exact::to_exponent(-b[j]);
  }
}

std::vector<ToricBinomialOp> saturation_generators(const Configuration& a, groebner::StepBudget& budget) {
  const std::size_t s = a.s();
  auto kernel = exact::integer_kernel(a.matrix());
  if (kernel.empty()) return {};
  const std::size_t n = s + 1;  // variable 0 is t, variable j + 1 is x_j
  std::vector<LaurentPolynomial> polys;
  for (const auto& b : kernel) {
    Exponent plus, minus;
    split(b, plus, minus);
    plus.insert(plus.begin(), 0);
    minus.insert(minus.begin(), 0);
    polys.push_back(LaurentPolynomial::monomial(plus) - LaurentPolynomial::monomial(minus));
  }
  Exponent all(n, 1);
  polys.push_back(LaurentPolynomial::monomial(all) - LaurentPolynomial::constant(n, 1));
  auto basis = groebner::buchberger(polys, n, groebner::MonomialOrder::elimination(1), budget);

  std::vector<ToricBinomialOp> out;
  for (const auto& g : basis.generators()) {
    if (g.leading_monomial()[0] != 0) continue;
    const auto& terms = g.terms();
    if (terms.size() != 2 || terms[0].coeff != 1 || terms[1].coeff != -1)
      throw std::logic_error("toric Groebner basis element is not a pure binomial: " + g.to_string());
    ToricBinomialOp op;
    op.u.assign(terms[0].exponent.begin() + 1, terms[0].exponent.end());
    op.v.assign(terms[1].exponent.begin() + 1, terms[1].exponent.end());
    for (std::size_t j = 0; j < s; ++j) {
      std::int64_t common = std::min(op.u[j], op.v[j]);
      op.u[j] -= common;
      op.v[j] -= common;
    }
    out.push_back(std::move(op));
  }
  return out;
}

std::vector<ToricBinomialOp> bounded_generators(const Configuration& a, groebner::StepBudget& budget, unsigned bound) {
  const std::size_t s = a.s(), d = a.d();
  const auto& m = a.matrix();
  std::vector<ToricBinomialOp> out;
  IntVector v(s, Integer(0));
  IntVector image(d, Integer(0));
  auto visit = [&](auto&& self, std::size_t j, long remaining) -> void {
    budget.spend();
    if (j == s) {
      if (std::any_of(image.begin(), image.end(), [](const Integer& x) { return x != 0; })) return;
      auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
      if (first == v.end() || *first < 0 || exact::gcd(v) != 1) return;
      ToricBinomialOp op;
      split(v, op.u, op.v);
      out.push_back(std::move(op));
      return;
    }
    for (long x = -remaining; x <= remaining; ++x) {
      v[j] = x;
      for (std::size_t i = 0; i < d; ++i) image[i] += x * m(i, j);
      self(self, j + 1, remaining - std::labs(x));
      for (std::size_t i = 0; i < d; ++i) image[i] -= x * m(i, j);
    }
    v[j] = 0;
  };
  visit(visit, 0, static_cast<long>(bound));
  std::sort(out.begin(), out.end(), [](const ToricBinomialOp& x, const ToricBinomialOp& y) {
    auto norm = [](const ToricBinomialOp& o) {
      return std::accumulate(o.u.begin(), o.u.end(), std::int64_t{0}) +
             std::accumulate(o.v.begin(), o.v.end(), std::int64_t{0});
    };
    if (norm(x) != norm(y)) return norm(x) < norm(y);
    return std::tie(x.u, x.v) > std::tie(y.u, y.v);
  });
  return out;
}

void check_long(long x, const char* what) {
  if (x < 0) throw InvalidInput(std::string(what) + " must be nonnegative");
}

}  // namespace

std::string ToricBinomialOp::to_string() const {
  auto side = [](const Exponent& e) {
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!out.empty()) out += "*";
      out += "d" + std::to_string(j + 1);
      if (e[j] > 1) out += "^" + std::to_string(e[j]);
    }
    return out.empty() ? std::string("1") : out;
  };
  return side(u) + " - " + side(v);
}

ToricGenerators toric_ideal_generators(const Configuration& a, ToricMethod method, groebner::StepBudget& budget,
                                       unsigned bound) {
  ToricGenerators out;
  out.method = method;
  if (method == ToricMethod::Saturation) {
    out.ops = saturation_generators(a, budget);
    out.generates_ideal = true;
  } else {
    out.ops = bounded_generators(a, budget, bound);
    out.generates_ideal = false;
  }
  return out;
}

ToricGenerators toric_ideal_generators(const Configuration& a, ToricMethod method, unsigned bound) {
  groebner::StepBudget budget;
  return toric_ideal_generators(a, method, budget, bound);
}

LaurentPolynomial binomial(const ToricBinomialOp& op) {
  return LaurentPolynomial::monomial(op.u) - LaurentPolynomial::monomial(op.v);
}

std::vector<EulerOp> euler_operators(const Configuration& a) {
  std::vector<EulerOp> out;
  for (std::size_t i = 0; i < a.d(); ++i) out.push_back({i, a.matrix().row(i)});
  return out;
}

RationalFunction apply_derivatives(const Exponent& u, const RationalFunction& f) {
  RationalFunction g = f;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < 0) throw InvalidInput("derivative orders must be nonnegative");
    for (std::int64_t k = 0; k < u[j] && !g.is_zero(); ++k) g = g.derivative(j);
  }
  return g;
}

RationalFunction apply_toric(const ToricBinomialOp& op, const RationalFunction& f) {
  if (op.u.size() != f.num_vars() || op.v.size() != f.num_vars())
    throw InvalidInput("operator and function have different numbers of variables");
  return apply_derivatives(op.u, f) - apply_derivatives(op.v, f);
}

RationalFunction apply_euler(const EulerOp& op, const RationalFunction& f) {
  const std::size_t s = f.num_vars();
  if (op.coefficients.size() != s) throw InvalidInput("Euler operator and function have different numbers of variables");
  RationalFunction total(s);
  for (std::size_t j = 0; j < s; ++j) {
    if (op.coefficients[j] == 0) continue;
    RationalFunction dj = f.derivative(j);
    if (dj.is_zero()) continue;
    total += dj * RationalFunction::variable(s, j).scaled(Rational(op.coefficients[j]));
  }
  return total;
}

std::optional<RatVector> homogeneity_degree(const Configuration& a, const RationalFunction& f) {
  if (f.is_zero()) throw DomainError("the zero function has no degree");
  if (f.num_vars() != a.s()) throw InvalidInput("function must be in x1..x" + std::to_string(a.s()));
  RatVector beta;
  const LaurentPolynomial f_den = f.expanded_denominator();
  for (const auto& op : euler_operators(a)) {
    RationalFunction g = apply_euler(op, f);
    if (g.is_zero()) {
      beta.emplace_back(0);
      continue;
    }
    // E_i f = beta_i f  <=>  N_g D_f = beta_i N_f D_g
    LaurentPolynomial lhs = g.numerator() * f_den;
    LaurentPolynomial rhs = f.numerator() * g.expanded_denominator();
    const auto& lead = lhs.leading_term();
    Rational c = rhs.coefficient(lead.exponent);
    if (c == 0) return std::nullopt;
    Rational b = lead.coeff / c;
    if (!(lhs == rhs * b)) return std::nullopt;
    beta.push_back(b);
  }
  return beta;
}

Certificate verify_hypergeometric(const Configuration& a, const RationalFunction& f, groebner::StepBudget& budget) {
  Certificate cert;
  cert.beta = homogeneity_degree(a, f);
  if (!cert.beta) {
    for (const auto& op : euler_operators(a)) {
      RationalFunction g = apply_euler(op, f);
      if (g.is_zero()) continue;
      LaurentPolynomial lhs = g.numerator() * f.expanded_denominator();
      LaurentPolynomial rhs = f.numerator() * g.expanded_denominator();
      Rational c = rhs.coefficient(lhs.leading_term().exponent);
      if (c == 0 || !(lhs == rhs * (lhs.leading_term().coeff / c))) {
        cert.inhomogeneous_row = op.row;
        break;
      }
    }
    cert.status = CertificateStatus::Refuted;
    return cert;
  }
  auto gens = toric_ideal_generators(a, ToricMethod::Saturation, budget);
  cert.generators = gens.ops.size();
  for (const auto& op : gens.ops) {
    RationalFunction r = apply_toric(op, f);
    if (!r.is_zero()) {
      cert.status = CertificateStatus::Refuted;
      cert.counterexample = op;
      cert.residual = r;
      return cert;
    }
  }
  cert.status = CertificateStatus::Certified;
  return cert;
}

Certificate verify_hypergeometric(const Configuration& a, const RationalFunction& f) {
  groebner::StepBudget budget;
  return verify_hypergeometric(a, f, budget);
}

Rational octahedron_coefficient(long p, long q, long k, long m, long n) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1) throw InvalidInput("p and q must be coprime positive integers");
  if (k < 1) throw InvalidInput("k must be positive");
  check_long(m, "m");
  check_long(n, "n");
  using exact::factorial;
  Integer num = factorial(Integer(p * (m + n + k) - 1)) * factorial(Integer(q * (m + n + k) - 1));
  Integer den = factorial(Integer(n * p)) * factorial(Integer(n * q)) * factorial(Integer(m * p)) *
                factorial(Integer(m * q));
  Rational out(num, den);
  out.canonicalize();
  return out;
}

std::pair<Rational, Rational> octahedron_quotients(long p, long q, long k, long m, long n, long a, long b) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1) throw InvalidInput("p and q must be coprime positive integers");
  if (k < 1) throw InvalidInput("k must be positive");
  check_long(m, "m");
  check_long(n, "n");
  check_long(a, "a");
  check_long(b, "b");
  const long mu = m + n, c = a + b;
  Integer top = 1;
  for (long j = 0; j < p; ++j) top *= p * (mu + c + k) + j;
  for (long j = 0; j < q; ++j) top *= q * (mu + c + k) + j;
  Integer r_den = 1, s_den = 1;
  for (long j = 1; j <= p; ++j) {
    r_den *= p * (m + a) + j;
    s_den *= p * (n + b) + j;
  }
  for (long j = 1; j <= q; ++j) {
    r_den *= q * (m + a) + j;
    s_den *= q * (n + b) + j;
  }
  Rational r(top, r_den), s(top, s_den);
  r.canonicalize();
  s.canonicalize();
  return {r, s};
}

}  // namespace gkz::weyl

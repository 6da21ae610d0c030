#include "gkz/circuits/circuit.hpp"

#include <algorithm>
#include <map>

#include "gkz/errors.hpp"
#include "gkz/exactalg/int_matrix.hpp"

namespace gkz::circuits {

namespace {

using exact::RatVector;

/// Echelon basis of the span of the currently chosen columns, with each
/// basis row expressed as a combination of the chosen columns.
struct Span {
  std::vector<RatVector> rows;
  std::vector<std::size_t> pivots;
  std::vector<RatVector> combos;  // combos[k][t] = coefficient of chosen column t
};

/// Reduces v against the span. Returns the residual and, through coeff, the
/// coefficients c with v - residual = sum c_t a_{chosen_t}.
RatVector reduce(const Span& span, RatVector v, std::size_t chosen, RatVector& coeff) {
  coeff.assign(chosen, Rational(0));
  for (std::size_t k = 0; k < span.rows.size(); ++k) {
    const Rational& x = v[span.pivots[k]];
    if (x == 0) continue;
    Rational f = x / span.rows[k][span.pivots[k]];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= f * span.rows[k][i];
    for (std::size_t t = 0; t < span.combos[k].size(); ++t) coeff[t] += f * span.combos[k][t];
  }
  return v;
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Integer int_pow(const Integer& base, const Integer& e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e.get_ui());
  return r;
}

struct Search {
  const std::vector<RatVector>& columns;
  const std::function<bool(const Circuit&)>& visit;
  std::size_t s, d;
  std::vector<std::size_t> chosen;
  bool stop = false;

  void extend(const Span& span) {
    const std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
    RatVector coeff;
    for (std::size_t j = start; j < s && !stop; ++j) {
      RatVector residual = reduce(span, columns[j], chosen.size(), coeff);
      if (is_zero(residual)) {
        if (std::none_of(coeff.begin(), coeff.end(), [](const Rational& x) { return x == 0; })) {
          RatVector dep(s, Rational(0));
          for (std::size_t t = 0; t < chosen.size(); ++t) dep[chosen[t]] = coeff[t];
          dep[j] = -1;
          Integer den = exact::common_denominator(dep);
          IntVector b(s);
          for (std::size_t i = 0; i < s; ++i) b[i] = Rational(dep[i] * den).get_num();
          if (!visit(Circuit::from_vector(std::move(b)))) stop = true;
        }
        continue;
      }
      if (chosen.size() == d) continue;
      Span next = span;
      std::size_t pivot = 0;
      while (residual[pivot] == 0) ++pivot;
      RatVector combo(chosen.size() + 1, Rational(0));
      for (std::size_t t = 0; t < chosen.size(); ++t) combo[t] = -coeff[t];
      combo[chosen.size()] = 1;
      for (auto& c : next.combos) c.emplace_back(0);
      next.rows.push_back(std::move(residual));
      next.pivots.push_back(pivot);
      next.combos.push_back(std::move(combo));
      chosen.push_back(j);
      extend(next);
      chosen.pop_back();
    }
  }
};

}  // namespace

Circuit Circuit::from_vector(IntVector b) {
  b = exact::primitive(std::move(b));
  Circuit c;
  c.rho = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] != 0) c.support.push_back(i);
    if (b[i] > 0) c.rho += b[i];
  }
  if (c.support.empty()) throw InvalidInput("circuit vector is zero");
  c.b = std::move(b);
  return c;
}

IntVector Circuit::b_plus() const {
  IntVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] > 0 ? b[i] : Integer(0);
  return out;
}

IntVector Circuit::b_minus() const {
  IntVector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i] < 0 ? Integer(-b[i]) : Integer(0);
  return out;
}

IntVector Circuit::compressed() const {
  IntVector out;
  for (auto i : support) out.push_back(b[i]);
  return out;
}

void for_each_circuit(const Configuration& a, const std::function<bool(const Circuit&)>& visit) {
  std::vector<RatVector> columns;
  for (std::size_t j = 0; j < a.s(); ++j) {
    RatVector v;
    for (const auto& x : a.column(j)) v.emplace_back(x);
    columns.push_back(std::move(v));
  }
  Search search{columns, visit, a.s(), a.d(), {}, false};
  search.extend(Span{});
}

std::vector<Circuit> enumerate_circuits(const Configuration& a) {
  std::vector<Circuit> out;
  for_each_circuit(a, [&](const Circuit& c) {
    out.push_back(c);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Circuit& x, const Circuit& y) { return x.support < y.support; });
  return out;
}

Balance is_balanced(const Circuit& c) {
  std::vector<std::pair<Integer, std::size_t>> pos, neg;
  for (auto i : c.support) {
    if (c.b[i] > 0) pos.emplace_back(c.b[i], i);
    else neg.emplace_back(-c.b[i], i);
  }
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  Balance result;
  const std::size_t n = std::min(pos.size(), neg.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (pos[k].first != neg[k].first) {
      result.unmatched = std::min(pos[k].first, neg[k].first);
      return result;
    }
  }
  if (pos.size() != neg.size()) {
    result.unmatched = pos.size() > n ? pos[n].first : neg[n].first;
    return result;
  }
  result.balanced = true;
  for (std::size_t k = 0; k < n; ++k) result.pairing.emplace_back(pos[k].second, neg[k].second);
  std::sort(result.pairing.begin(), result.pairing.end());
  return result;
}

CircuitDiscriminant circuit_discriminant(const Circuit& c) {
  const std::size_t s = c.b.size();
  Integer num = 1, den = 1;
  for (auto i : c.support) {
    Integer v = abs(c.b[i]);
    if (c.b[i] < 0) num *= int_pow(v, v);
    else den *= int_pow(v, v);
  }
  Rational lambda(num, den);
  lambda.canonicalize();
  if (c.rho % 2 != 0) lambda = -lambda;
  exact::Exponent plus(s, 0), minus(s, 0);
  for (auto i : c.support) {
    if (c.b[i] > 0) plus[i] = exact::to_exponent(c.b[i]);
    else minus[i] = exact::to_exponent(-c.b[i]);
  }
  CircuitDiscriminant out;
  out.lambda = lambda;
  out.rational_form = LaurentPolynomial::monomial(minus) - LaurentPolynomial::monomial(plus, lambda);
  out.integer_form = out.rational_form * Rational(lambda.get_den());
  return out;
}

LaurentPolynomial balanced_series(const Circuit& c, unsigned N) {
  if (!is_balanced(c).balanced) throw DomainError("balanced_series requires a balanced circuit");
  const std::size_t s = c.b.size();
  const bool odd = c.rho % 2 != 0;
  std::vector<exact::Term> terms;
  for (unsigned n = 0; n <= N; ++n) {
    exact::Exponent e(s, 0);
    for (auto i : c.support) {
      std::int64_t bi = exact::to_exponent(c.b[i]);
      e[i] = bi > 0 ? exact::checked_mul(static_cast<std::int64_t>(n), bi)
                    : exact::checked_mul(static_cast<std::int64_t>(n) + 1, bi);
    }
    terms.push_back({std::move(e), Rational((odd && n % 2 == 1) ? -1 : 1)});
  }
  return LaurentPolynomial::from_terms(s, std::move(terms));
}

Rational canonical_coefficient(const Circuit& circuit, const IntVector& c, const Integer& n) {
  if (c.size() != circuit.b.size()) throw InvalidInput("offset vector has the wrong length");
  Integer num = 1, den = 1;
  for (auto j : circuit.support) {
    if (circuit.b[j] < 0) num *= exact::factorial(-c[j] - n * circuit.b[j] - 1);
    else den *= exact::factorial(c[j] + n * circuit.b[j]);
  }
  Rational r(num, den);
  r.canonicalize();
  if (circuit.rho % 2 != 0 && n % 2 != 0) r = -r;
  return r;
}

std::pair<Integer, Integer> product_identity_sides(const Circuit& c, const Integer& n) {
  Integer left = 1, right = 1;
  for (auto i : c.support) {
    Integer v = abs(c.b[i]);
    Integer block = exact::rising_block(n * v, n * v + v);
    if (c.b[i] > 0) left *= block;
    else right *= block;
  }
  return {left, right};
}

bool product_identity_holds(const Circuit& c, const Integer& n) {
  auto [l, r] = product_identity_sides(c, n);
  return l == r;
}

Rational coefficient_ratio(const Circuit& circuit, const IntVector& c, const Integer& n) {
  Rational r = 1;
  for (auto j : circuit.support) {
    const Integer& bj = circuit.b[j];
    if (bj < 0) {
      Integer beta = -bj;
      for (Integer k = 0; k < beta; ++k) r *= Rational(beta * n - c[j] + k);
    } else {
      for (Integer k = 1; k <= bj; ++k) r /= Rational(bj * n + c[j] + k);
    }
  }
  if (circuit.rho % 2 != 0) r = -r;
  return r;
}

std::vector<OrderSum> coefficient_ratio_order_sums(const Circuit& circuit, const IntVector& c) {
  std::map<Rational, long> sums;
  auto class_of = [](Rational z) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), z.get_num_mpz_t(), z.get_den_mpz_t());
    return Rational(z - fl);
  };
  for (auto j : circuit.support) {
    const Integer& bj = circuit.b[j];
    if (bj < 0) {
      Integer beta = -bj;
      for (Integer k = 0; k < beta; ++k) sums[class_of(Rational(c[j] - k, beta))] += 1;
    } else {
      for (Integer k = 1; k <= bj; ++k) sums[class_of(Rational(-(c[j] + k), bj))] -= 1;
    }
  }
  std::vector<OrderSum> out;
  for (const auto& [z, ord] : sums) out.push_back({z, ord});
  return out;
}

bool circuit_gkz_rational(const Circuit& c) { return is_balanced(c).balanced; }

Configuration configuration_from_circuit(const IntVector& b) {
  if (b.size() < 3) throw InvalidInput("a circuit configuration needs at least three points");
  Integer total = 0;
  for (const auto& x : b) {
    if (x == 0) throw InvalidInput("circuit vector must have full support");
    total += x;
  }
  if (total != 0) throw InvalidInput("circuit entries must sum to zero");
  if (exact::gcd(b) != 1) throw InvalidInput("circuit vector must be primitive");
  exact::IntMatrix row(1, b.size());
  for (std::size_t j = 0; j < b.size(); ++j) row(0, j) = b[j];
  return Configuration(exact::IntMatrix::from_rows(exact::integer_kernel(row)));
}

}  // namespace gkz::circuits

#include "gkz/exactalg/rational_function.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gkz/errors.hpp"

namespace gkz::exact {

namespace {

Rational rational_pow(const Rational& c, std::uint64_t e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), c.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), c.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

std::int64_t to_signed(std::uint64_t e) {
  if (e > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("exponent overflow");
  return static_cast<std::int64_t>(e);
}

/// Merges two sorted factor lists, combining exponents of equal factors with
/// the given binary operation.
template <class Combine>
std::vector<DenominatorFactor> merge_factors(const std::vector<DenominatorFactor>& a,
                                             const std::vector<DenominatorFactor>& b, Combine combine) {
  std::vector<DenominatorFactor> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? 1 : j == b.size() ? -1 : compare(a[i].poly, b[j].poly);
    if (c < 0) {
      out.push_back({a[i].poly, combine(a[i].exponent, 0)});
      ++i;
    } else if (c > 0) {
      out.push_back({b[j].poly, combine(0, b[j].exponent)});
      ++j;
    } else {
      out.push_back({a[i].poly, combine(a[i].exponent, b[j].exponent)});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Numerator of this function rewritten over the common denominator `target`.
LaurentPolynomial lift_numerator(const LaurentPolynomial& num, const std::vector<DenominatorFactor>& own,
                                 const std::vector<DenominatorFactor>& target) {
  LaurentPolynomial out = num;
  std::size_t i = 0;
  for (const auto& f : target) {
    std::uint64_t have = 0;
    if (i < own.size() && compare(own[i].poly, f.poly) == 0) have = own[i++].exponent;
    if (f.exponent > have) out *= f.poly.pow(f.exponent - have);
  }
  return out;
}

}  // namespace

RationalFunction::RationalFunction(LaurentPolynomial numerator) : num_(std::move(numerator)) {}

RationalFunction::RationalFunction(LaurentPolynomial numerator, std::vector<DenominatorFactor> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  normalize();
}

RationalFunction RationalFunction::constant(std::size_t nvars, const Rational& c) {
  return RationalFunction(LaurentPolynomial::constant(nvars, c));
}

RationalFunction RationalFunction::variable(std::size_t nvars, std::size_t j) {
  return RationalFunction(LaurentPolynomial::variable(nvars, j));
}

void RationalFunction::normalize() {
  for (const auto& f : den_) {
    if (f.poly.is_zero()) throw DomainError("division by the zero polynomial");
    if (f.poly.num_vars() != num_.num_vars() && !num_.is_zero())
      throw InvalidInput("denominator factor lives in a different ring");
  }
  if (num_.is_zero()) {
    std::size_t n = num_.num_vars();
    if (n == 0 && !den_.empty()) n = den_.front().poly.num_vars();
    num_ = LaurentPolynomial(n);
    den_.clear();
    return;
  }
  std::vector<DenominatorFactor> kept;
  kept.reserve(den_.size());
  for (auto& f : den_) {
    if (f.exponent == 0) continue;
    Exponent w = f.poly.min_exponents();
    Exponent neg(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    LaurentPolynomial p = f.poly.shift(neg);
    Rational c = p.content();
    p *= Rational(1) / c;
    std::int64_t e = to_signed(f.exponent);
    Exponent mono(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) mono[i] = -checked_mul(w[i], e);
    num_ = num_.shift(mono) * (Rational(1) / rational_pow(c, f.exponent));
    if (p.is_constant()) continue;
    kept.push_back({std::move(p), f.exponent});
  }
  std::sort(kept.begin(), kept.end(),
            [](const DenominatorFactor& a, const DenominatorFactor& b) { return compare(a.poly, b.poly) < 0; });
  den_.clear();
  for (auto& f : kept) {
    if (!den_.empty() && compare(den_.back().poly, f.poly) == 0) {
      den_.back().exponent += f.exponent;
    } else {
      den_.push_back(std::move(f));
    }
  }
}

LaurentPolynomial RationalFunction::expanded_denominator() const {
  LaurentPolynomial d = LaurentPolynomial::constant(num_vars(), 1);
  for (const auto& f : den_) d *= f.poly.pow(f.exponent);
  return d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  auto target = merge_factors(a.den_, b.den_, [](std::uint64_t x, std::uint64_t y) { return std::max(x, y); });
  LaurentPolynomial n = lift_numerator(a.num_, a.den_, target) + lift_numerator(b.num_, b.den_, target);
  RationalFunction r;
  r.num_ = std::move(n);
  if (r.num_.is_zero()) {
    r.num_ = LaurentPolynomial(a.num_vars());
    return r;
  }
  r.den_ = std::move(target);
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r;
  r.num_ = a.num_ * b.num_;
  if (r.num_.is_zero()) {
    r.num_ = LaurentPolynomial(std::max(a.num_vars(), b.num_vars()));
    return r;
  }
  r.den_ = merge_factors(a.den_, b.den_, [](std::uint64_t x, std::uint64_t y) { return x + y; });
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::scaled(const Rational& c) const {
  RationalFunction r = *this;
  r.num_ *= c;
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

RationalFunction RationalFunction::pow(std::uint64_t n) const {
  RationalFunction r;
  r.num_ = num_.pow(n);
  if (n == 0) return r;
  r.den_ = den_;
  for (auto& f : r.den_) {
    if (f.exponent > UINT64_MAX / n) throw std::overflow_error("exponent overflow");
    f.exponent *= n;
  }
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("division by the zero polynomial");
  return RationalFunction(expanded_denominator(), {{num_, 1}});
}

RationalFunction RationalFunction::derivative(std::size_t j) const {
  // d(N / prod P_k^e_k) = (N' * prod P_k - N * sum_k e_k P_k' prod_{l != k} P_l) / prod P_k^(e_k + 1),
  // where only factors with P_k' != 0 are raised.
  const std::size_t n = num_vars();
  std::vector<LaurentPolynomial> dp;
  std::vector<std::size_t> moving;
  dp.reserve(den_.size());
  for (std::size_t k = 0; k < den_.size(); ++k) {
    dp.push_back(den_[k].poly.derivative(j));
    if (!dp.back().is_zero()) moving.push_back(k);
  }
  LaurentPolynomial all = LaurentPolynomial::constant(n, 1);
  for (auto k : moving) all *= den_[k].poly;
  LaurentPolynomial numer = num_.derivative(j) * all;
  for (auto k : moving) {
    LaurentPolynomial others = LaurentPolynomial::constant(n, 1);
    for (auto l : moving)
      if (l != k) others *= den_[l].poly;
    numer -= num_ * dp[k] * others * Rational(Integer(std::to_string(den_[k].exponent)));
  }
  RationalFunction r;
  r.num_ = std::move(numer);
  if (r.num_.is_zero()) {
    r.num_ = LaurentPolynomial(n);
    return r;
  }
  r.den_ = den_;
  for (auto k : moving) r.den_[k].exponent += 1;
  return r;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = 1;
  for (const auto& f : den_) {
    Rational v = f.poly.evaluate(point);
    if (v == 0) throw DomainError("denominator vanishes at the evaluation point");
    d *= rational_pow(v, f.exponent);
  }
  return num_.evaluate(point) / d;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto target = merge_factors(a.den_, b.den_, [](std::uint64_t x, std::uint64_t y) { return std::max(x, y); });
  return lift_numerator(a.num_, a.den_, target) == lift_numerator(b.num_, b.den_, target);
}

std::string RationalFunction::to_string() const {
  const std::size_t n = num_vars();
  Exponent lo = num_.min_exponents();
  Exponent lift(n, 0);
  bool has_monomial_den = false;
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] < 0) {
      lift[i] = -lo[i];
      has_monomial_den = true;
    }
  LaurentPolynomial top = has_monomial_den ? num_.shift(lift) : num_;
  if (den_.empty() && !has_monomial_den) return top.to_string();

  std::ostringstream os;
  if (top.size() > 1) {
    os << '(' << top.to_string() << ')';
  } else {
    os << top.to_string();
  }
  const bool wrap = has_monomial_den || den_.size() > 1;
  os << (wrap ? "/(" : "/");
  bool first = true;
  if (has_monomial_den) {
    os << LaurentPolynomial::monomial(lift).to_string();
    first = false;
  }
  for (const auto& f : den_) {
    if (!first) os << '*';
    first = false;
    os << '(' << f.poly.to_string() << ')';
    if (f.exponent > 1) os << '^' << f.exponent;
  }
  if (wrap) os << ')';
  return os.str();
}

}  // namespace gkz::exact

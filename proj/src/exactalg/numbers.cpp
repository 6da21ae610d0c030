#include "gkz/exactalg/numbers.hpp"

#include <stdexcept>

#include "gkz/errors.hpp"

namespace gkz::exact {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InvalidInput("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InvalidInput("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(const Integer& n) {
  if (n < 0) throw DomainError("factorial of negative integer " + n.get_str());
  if (!n.fits_ulong_p()) throw DomainError("factorial argument too large");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n.get_ui());
  return r;
}

Integer rising_block(const Integer& lo, const Integer& hi) {
  Integer r = 1;
  for (Integer k = lo + 1; k <= hi; ++k) r *= k;
  return r;
}

Integer gcd(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntVector primitive(IntVector v) {
  Integer g = gcd(v);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

Integer common_denominator(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
  return r;
}

std::int64_t to_exponent(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("exponent " + z.get_str() + " out of range");
  return z.get_si();
}

}  // namespace gkz::exact

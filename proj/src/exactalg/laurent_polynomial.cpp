#include "gkz/exactalg/laurent_polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "gkz/errors.hpp"

namespace gkz::exact {

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : e) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void check_vars(std::size_t a, std::size_t b) {
  if (a != b) throw InvalidInput("polynomials live in rings with different numbers of variables");
}

bool term_before(const Term& a, const Term& b) { return compare_exponents(a.exponent, b.exponent) < 0; }

}  // namespace

std::int64_t total_degree(const Exponent& e) {
  std::int64_t d = 0;
  for (auto x : e) d = checked_add(d, x);
  return d;
}

int compare_exponents(const Exponent& a, const Exponent& b) {
  std::int64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t nvars, const Rational& c) {
  LaurentPolynomial p(nvars);
  if (c != 0) p.terms_.push_back({Exponent(nvars, 0), c});
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw InvalidInput("variable index out of range");
  Exponent e(nvars, 0);
  e[j] = 1;
  return monomial(std::move(e));
}

LaurentPolynomial LaurentPolynomial::monomial(Exponent e, const Rational& c) {
  LaurentPolynomial p(e.size());
  if (c != 0) p.terms_.push_back({std::move(e), c});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  LaurentPolynomial p(nvars);
  for (const auto& t : terms) check_vars(nvars, t.exponent.size());
  std::sort(terms.begin(), terms.end(), term_before);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

bool LaurentPolynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exponent.begin(), terms_[0].exponent.end(),
                     [](std::int64_t x) { return x == 0; });
}

bool LaurentPolynomial::is_polynomial() const {
  for (const auto& t : terms_)
    for (auto x : t.exponent)
      if (x < 0) return false;
  return true;
}

const Term& LaurentPolynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

Rational LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exponent& x) {
    return compare_exponents(t.exponent, x) < 0;
  });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

Rational LaurentPolynomial::constant_term() const { return coefficient(Exponent(nvars_, 0)); }

Exponent LaurentPolynomial::min_exponents() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent m = terms_[0].exponent;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::min(m[i], t.exponent[i]);
  return m;
}

Exponent LaurentPolynomial::max_exponents() const {
  if (terms_.empty()) return Exponent(nvars_, 0);
  Exponent m = terms_[0].exponent;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i) m[i] = std::max(m[i], t.exponent[i]);
  return m;
}

std::int64_t LaurentPolynomial::max_total_degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.front().exponent);
}

std::int64_t LaurentPolynomial::min_total_degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.back().exponent);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    nvars_ = o.nvars_;
    terms_ = o.terms_;
    return *this;
  }
  check_vars(nvars_, o.nvars_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int c = (a == terms_.end()) ? 1 : (b == o.terms_.end()) ? -1 : compare_exponents(a->exponent, b->exponent);
    if (c < 0) {
      merged.push_back(std::move(*a++));
    } else if (c > 0) {
      merged.push_back(*b++);
    } else {
      Rational s = a->coeff + b->coeff;
      if (s != 0) merged.push_back({std::move(a->exponent), s});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPolynomial(std::max(a.nvars_, b.nvars_));
  check_vars(a.nvars_, b.nvars_);
  const std::size_t n = a.nvars_;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& mono = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    LaurentPolynomial r(n);
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      Exponent e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = checked_add(t.exponent[i], mono.exponent[i]);
      r.terms_.push_back({std::move(e), t.coeff * mono.coeff});
    }
    // multiplication by a monomial preserves the canonical order
    return r;
  }
  std::unordered_map<Exponent, Rational, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Exponent e(n);
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = checked_add(s.exponent[i], t.exponent[i]);
      auto [it, inserted] = acc.try_emplace(e, s.coeff);
      if (inserted) {
        it->second *= t.coeff;
      } else {
        it->second += s.coeff * t.coeff;
      }
    }
  LaurentPolynomial r(n);
  r.terms_.reserve(acc.size());
  for (auto& [k, v] : acc)
    if (v != 0) r.terms_.push_back({k, std::move(v)});
  std::sort(r.terms_.begin(), r.terms_.end(), term_before);
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  *this = *this * o;
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(std::uint64_t n) const {
  LaurentPolynomial result = constant(nvars_, 1);
  LaurentPolynomial base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t j) const {
  if (j >= nvars_) throw InvalidInput("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exponent[j] == 0) continue;
    Term d{t.exponent, t.coeff * Rational(Integer(static_cast<long>(t.exponent[j])))};
    d.exponent[j] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(nvars_, std::move(out));
}

LaurentPolynomial LaurentPolynomial::shift(const Exponent& w) const {
  check_vars(nvars_, w.size());
  return *this * monomial(w);
}

Rational LaurentPolynomial::evaluate(std::span<const Rational> point) const {
  check_vars(nvars_, point.size());
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < nvars_; ++i) {
      std::int64_t k = t.exponent[i];
      if (k == 0) continue;
      if (point[i] == 0) {
        if (k < 0) throw DomainError("Laurent monomial evaluated at zero");
        v = 0;
        break;
      }
      Rational p;
      std::uint64_t ak = static_cast<std::uint64_t>(k < 0 ? -k : k);
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), ak);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), ak);
      p.canonicalize();
      if (k < 0) p = 1 / p;
      v *= p;
    }
    sum += v;
  }
  return sum;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& d) const {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return LaurentPolynomial(d.nvars_);
  check_vars(nvars_, d.nvars_);
  const Exponent lo_a = min_exponents(), hi_a = max_exponents();
  const Exponent lo_d = d.min_exponents(), hi_d = d.max_exponents();
  Exponent lo_q(nvars_), hi_q(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    lo_q[i] = lo_a[i] - lo_d[i];
    hi_q[i] = hi_a[i] - hi_d[i];
    if (lo_q[i] > hi_q[i]) return std::nullopt;
  }
  const Term& lead = d.leading_term();
  LaurentPolynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& r = rem.leading_term();
    Exponent e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      e[i] = r.exponent[i] - lead.exponent[i];
      if (e[i] < lo_q[i] || e[i] > hi_q[i]) return std::nullopt;
    }
    Rational c = r.coeff / lead.coeff;
    rem -= d * monomial(e, c);
    quotient.push_back({std::move(e), c});
  }
  return from_terms(nvars_, std::move(quotient));
}

LaurentPolynomial LaurentPolynomial::substitute(std::size_t j, const LaurentPolynomial& p) const {
  check_vars(nvars_, p.nvars_);
  LaurentPolynomial out(nvars_);
  std::int64_t top = 0;
  for (const auto& t : terms_) {
    if (t.exponent[j] < 0) throw DomainError("substitution into a negative power");
    top = std::max(top, t.exponent[j]);
  }
  std::vector<LaurentPolynomial> powers{constant(nvars_, 1)};
  for (std::int64_t k = 1; k <= top; ++k) powers.push_back(powers.back() * p);
  for (const auto& t : terms_) {
    Exponent e = t.exponent;
    std::int64_t k = e[j];
    e[j] = 0;
    out += monomial(std::move(e), t.coeff) * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::remap(std::size_t new_nvars, std::span<const std::size_t> index_map) const {
  check_vars(nvars_, index_map.size());
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponent e(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exponent[i] == 0) continue;
      if (index_map[i] >= new_nvars) throw InvalidInput("variable dropped by remap");
      e[index_map[i]] = checked_add(e[index_map[i]], t.exponent[i]);
    }
    out.push_back({std::move(e), t.coeff});
  }
  return from_terms(new_nvars, std::move(out));
}

Rational LaurentPolynomial::content() const {
  if (terms_.empty()) return 0;
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (terms_.front().coeff < 0) c = -c;
  return c;
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.nvars_ != b.nvars_) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

int compare(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_ ? -1 : 1;
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    int c = compare_exponents(a.terms_[i].exponent, b.terms_[i].exponent);
    if (c != 0) return c;
    int q = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (q != 0) return q < 0 ? -1 : 1;
  }
  return 0;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      std::int64_t k = t.exponent[i];
      if (k == 0) continue;
      if (k < 0) throw DomainError("to_string on a Laurent polynomial with negative exponents");
      mono << (any ? "*" : "") << 'x' << (i + 1);
      if (k > 1) mono << '^' << k;
      any = true;
    }
    if (!any) {
      os << exact::to_string(c);
    } else if (c == 1) {
      os << mono.str();
    } else {
      os << exact::to_string(c) << '*' << mono.str();
    }
  }
  return os.str();
}

}  // namespace gkz::exact

#include "gkz/groebner/groebner.hpp"

#include <algorithm>
#include <set>

#include "gkz/errors.hpp"

namespace gkz::groebner {

namespace {

std::int64_t degree(const Exponent& e, std::size_t from, std::size_t to) {
  std::int64_t d = 0;
  for (std::size_t i = from; i < to; ++i) d += e[i];
  return d;
}

int grevlex_range(const Exponent& a, const Exponent& b, std::size_t from, std::size_t to) {
  std::int64_t da = degree(a, from, to), db = degree(b, from, to);
  if (da != db) return da > db ? -1 : 1;
  for (std::size_t i = to; i > from; --i) {
    if (a[i - 1] != b[i - 1]) return a[i - 1] < b[i - 1] ? -1 : 1;
  }
  return 0;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponent difference(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

}  // namespace

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    case OrderKind::Elimination: {
      std::size_t k = std::min(block, a.size());
      int c = grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return grevlex_range(a, b, k, a.size());
    }
    case OrderKind::Grevlex:
    default:
      return grevlex_range(a, b, 0, a.size());
  }
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Elimination:
      return "elimination(" + std::to_string(block) + ")";
    case OrderKind::Grevlex:
    default:
      return "grevlex";
  }
}

void StepBudget::spend(std::uint64_t n) {
  used_ += n;
  if (used_ > limit_)
    throw BudgetExceeded("step budget of " + std::to_string(limit_) + " reduction steps exceeded");
}

OrderedPolynomial::OrderedPolynomial(const LaurentPolynomial& p, MonomialOrder order)
    : nvars_(p.num_vars()), order_(order), terms_(p.terms()) {
  if (!p.is_polynomial()) throw DomainError("Groebner computations need nonnegative exponents");
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return order_.compare(a.exponent, b.exponent) < 0; });
}

const Term& OrderedPolynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

void OrderedPolynomial::subtract_multiple(const Rational& c, const Exponent& m, const OrderedPolynomial& g) {
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  Exponent shifted(nvars_);
  auto shift = [&](const Term& t) {
    for (std::size_t i = 0; i < nvars_; ++i) shifted[i] = exact::checked_add(t.exponent[i], m[i]);
  };
  if (b != g.terms_.end()) shift(*b);
  while (a != terms_.end() || b != g.terms_.end()) {
    int cmp = a == terms_.end() ? 1 : b == g.terms_.end() ? -1 : order_.compare(a->exponent, shifted);
    if (cmp < 0) {
      out.push_back(std::move(*a++));
    } else if (cmp > 0) {
      out.push_back({shifted, -c * b->coeff});
      if (++b != g.terms_.end()) shift(*b);
    } else {
      Rational v = a->coeff - c * b->coeff;
      if (v != 0) out.push_back({std::move(a->exponent), v});
      ++a;
      if (++b != g.terms_.end()) shift(*b);
    }
  }
  terms_ = std::move(out);
}

void OrderedPolynomial::make_monic() {
  if (terms_.empty()) return;
  Rational lc = terms_.front().coeff;
  if (lc == 1) return;
  for (auto& t : terms_) t.coeff /= lc;
}

LaurentPolynomial OrderedPolynomial::to_laurent() const { return LaurentPolynomial::from_terms(nvars_, terms_); }

bool operator==(const OrderedPolynomial& a, const OrderedPolynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

OrderedPolynomial GroebnerBasis::reduce(OrderedPolynomial p, StepBudget* budget) const {
  OrderedPolynomial remainder(nvars_, order_);
  while (!p.is_zero()) {
    const Term& lt = p.terms_.front();
    const OrderedPolynomial* divisor = nullptr;
    for (const auto& g : gens_)
      if (divides(g.leading_monomial(), lt.exponent)) {
        divisor = &g;
        break;
      }
    if (divisor == nullptr) {
      remainder.terms_.push_back(std::move(p.terms_.front()));
      p.terms_.erase(p.terms_.begin());
      continue;
    }
    if (budget) budget->spend();
    Rational c = lt.coeff / divisor->leading_term().coeff;
    Exponent m = difference(lt.exponent, divisor->leading_monomial());
    p.subtract_multiple(c, m, *divisor);
  }
  return remainder;
}

LaurentPolynomial GroebnerBasis::normal_form(const LaurentPolynomial& p) const {
  return reduce(OrderedPolynomial(p, order_)).to_laurent();
}

bool GroebnerBasis::is_unit_ideal() const {
  return gens_.size() == 1 && std::all_of(gens_[0].leading_monomial().begin(), gens_[0].leading_monomial().end(),
                                          [](std::int64_t x) { return x == 0; });
}

bool GroebnerBasis::has_pure_power(std::size_t i) const {
  for (const auto& g : gens_) {
    const auto& lm = g.leading_monomial();
    bool pure = lm[i] > 0;
    for (std::size_t k = 0; k < nvars_ && pure; ++k)
      if (k != i && lm[k] != 0) pure = false;
    if (pure || is_unit_ideal()) return true;
  }
  return false;
}

std::vector<Exponent> GroebnerBasis::standard_monomials() const {
  Exponent bound(nvars_, 0);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!has_pure_power(i)) throw DomainError("ideal is not zero-dimensional");
    std::int64_t best = INT64_MAX;
    for (const auto& g : gens_) {
      const auto& lm = g.leading_monomial();
      bool pure = true;
      for (std::size_t k = 0; k < nvars_; ++k)
        if (k != i && lm[k] != 0) pure = false;
      if (pure) best = std::min(best, lm[i]);
    }
    bound[i] = best;
  }
  std::vector<Exponent> out;
  Exponent e(nvars_, 0);
  for (;;) {
    bool standard = true;
    for (const auto& g : gens_)
      if (divides(g.leading_monomial(), e)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(e);
    std::size_t i = 0;
    while (i < nvars_ && ++e[i] >= bound[i]) e[i++] = 0;
    if (i == nvars_) break;
  }
  std::sort(out.begin(), out.end(), [&](const Exponent& a, const Exponent& b) { return order_.compare(a, b) < 0; });
  return out;
}

GroebnerBasis buchberger(const std::vector<LaurentPolynomial>& polys, std::size_t nvars, MonomialOrder order,
                         StepBudget& budget) {
  GroebnerBasis basis(nvars, order);
  std::vector<OrderedPolynomial>& g = basis.gens_;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    if (p.num_vars() != nvars) throw InvalidInput("generator lives in a ring of the wrong size");
    OrderedPolynomial q(p, order);
    q.make_monic();
    g.push_back(std::move(q));
  }
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);

  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    Exponent l = lcm(g[pr.first].leading_monomial(), g[pr.second].leading_monomial());
    return degree(l, 0, nvars);
  };

  while (!pending.empty()) {
    auto best = pending.begin();
    std::int64_t best_degree = lcm_degree(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      std::int64_t dg = lcm_degree(*it);
      if (dg < best_degree) {
        best = it;
        best_degree = dg;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    budget.spend();
    const Exponent& li = g[i].leading_monomial();
    const Exponent& lj = g[j].leading_monomial();
    if (coprime(li, lj)) continue;
    Exponent l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(g[k].leading_monomial(), l)) continue;
      auto key = [](std::size_t x, std::size_t y) { return std::make_pair(std::min(x, y), std::max(x, y)); };
      if (!pending.count(key(i, k)) && !pending.count(key(j, k))) chain = true;
    }
    if (chain) continue;
    OrderedPolynomial sp(nvars, order);
    sp.subtract_multiple(-1, difference(l, li), g[i]);
    sp.subtract_multiple(1, difference(l, lj), g[j]);
    OrderedPolynomial r = basis.reduce(std::move(sp), &budget);
    if (r.is_zero()) continue;
    r.make_monic();
    std::size_t n = g.size();
    g.push_back(std::move(r));
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  }

  // Keep one generator per minimal leading monomial.
  std::vector<OrderedPolynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i) continue;
      const auto& lk = g[k].leading_monomial();
      const auto& li = g[i].leading_monomial();
      if (divides(lk, li) && (lk != li || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  g = std::move(minimal);
  for (std::size_t i = 0; i < g.size(); ++i) {
    GroebnerBasis others(nvars, order);
    for (std::size_t k = 0; k < g.size(); ++k)
      if (k != i) others.gens_.push_back(g[k]);
    OrderedPolynomial tail = g[i];
    Term lead = tail.terms_.front();
    tail.terms_.erase(tail.terms_.begin());
    OrderedPolynomial reduced = others.reduce(std::move(tail), &budget);
    reduced.terms_.insert(reduced.terms_.begin(), std::move(lead));
    g[i] = std::move(reduced);
  }
  std::sort(g.begin(), g.end(), [&](const OrderedPolynomial& a, const OrderedPolynomial& b) {
    return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return basis;
}

GroebnerBasis buchberger(const std::vector<LaurentPolynomial>& polys, std::size_t nvars, MonomialOrder order) {
  StepBudget budget;
  return buchberger(polys, nvars, order, budget);
}

}  // namespace gkz::groebner

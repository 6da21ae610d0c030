#include "gkz/cayley/cayley.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gkz/errors.hpp"
#include "gkz/exactalg/int_matrix.hpp"
#include "gkz/polytope/faces.hpp"

namespace gkz::cayley {

namespace {

using exact::RatVector;
using exact::Rational;
using Subset = std::vector<std::size_t>;

/// Calls visit on every k-subset of {0..n-1} in lexicographic order until it
/// returns false.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const Subset&)>& visit) {
  Subset c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  if (k > n) return true;
  for (;;) {
    if (!visit(c)) return false;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t t = i; t < k; ++t) c[t] = c[t - 1] + 1;
  }
}

std::optional<CayleyStructure> build_structure(const Configuration& a, const std::vector<Subset>& groups) {
  const std::size_t d = a.d(), s = a.s();
  const std::size_t r = groups.size() - 1;
  std::vector<std::size_t> group_of(s);
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (auto j : groups[i]) group_of[j] = i;

  std::vector<IntVector> differences(s, IntVector(d, Integer(0)));
  std::vector<IntVector> nonzero;
  for (std::size_t j = 0; j < s; ++j) {
    std::size_t base = groups[group_of[j]].front();
    if (base == j) continue;
    for (std::size_t i = 0; i < d; ++i) differences[j][i] = a.matrix()(i, j) - a.matrix()(i, base);
    nonzero.push_back(differences[j]);
  }

  std::size_t k = 0;
  IntMatrix u = IntMatrix::identity(d);
  IntVector invariants;
  if (!nonzero.empty()) {
    auto snf = exact::smith_normal_form(IntMatrix::from_columns(nonzero, d));
    u = snf.u;
    for (std::size_t t = 0; t < std::min(snf.d.rows(), snf.d.cols()); ++t)
      if (snf.d(t, t) != 0) invariants.push_back(snf.d(t, t));
    k = invariants.size();
  }
  if (k + r + 1 != d) throw std::logic_error("difference lattice has unexpected rank");
  if (k > r) return std::nullopt;

  // coordinates[t][j]: coordinate t of a_j relative to its base point
  std::vector<IntVector> coordinates(k, IntVector(s, Integer(0)));
  for (std::size_t j = 0; j < s; ++j) {
    IntVector image = u * differences[j];
    for (std::size_t t = 0; t < k; ++t) {
      if (!mpz_divisible_p(image[t].get_mpz_t(), invariants[t].get_mpz_t()))
        throw std::logic_error("difference vector outside its own lattice");
      coordinates[t][j] = image[t] / invariants[t];
    }
  }
  IntMatrix projection(k, d);
  for (std::size_t t = 0; t < k; ++t) {
    int sign = 0;
    for (std::size_t j = 0; j < s && sign == 0; ++j)
      if (coordinates[t][j] != 0) sign = coordinates[t][j] > 0 ? 1 : -1;
    for (std::size_t i = 0; i < d; ++i) projection(t, i) = sign < 0 ? Integer(-u(t, i)) : u(t, i);
    if (sign < 0)
      for (auto& x : coordinates[t]) x = -x;
  }
  for (const auto& g : groups)
    for (std::size_t t = 0; t < k; ++t) {
      Integer low = coordinates[t][g.front()];
      for (auto j : g) low = std::min(low, coordinates[t][j]);
      for (auto j : g) coordinates[t][j] -= low;
    }

  CayleyStructure cs;
  cs.r = r;
  cs.groups = groups;
  cs.projection = projection;
  cs.invariants = invariants;
  for (const auto& g : groups) {
    cs.base_points.push_back(g.front());
    IntMatrix factor(r, g.size());
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t c = 0; c < g.size(); ++c) factor(t, c) = coordinates[t][g[c]];
    cs.factors.push_back(std::move(factor));
  }
  IntMatrix assembled(r + 1 + k, s);
  for (std::size_t j = 0; j < s; ++j) {
    assembled(group_of[j], j) = 1;
    for (std::size_t t = 0; t < k; ++t) assembled(r + 1 + t, j) = coordinates[t][j];
  }
  cs.assembled = assembled;
  if (exact::integer_kernel(assembled) != exact::integer_kernel(a.matrix())) return std::nullopt;
  return cs;
}

}  // namespace

std::vector<Subset> row_span_indicators(const Configuration& a, const DetectOptions& options) {
  const std::size_t d = a.d(), s = a.s();
  if (d >= 63 || (std::uint64_t{1} << d) > options.max_subsets)
    throw BudgetExceeded("search space exceeded: 2^" + std::to_string(d) + " candidate functionals, cap " +
                         std::to_string(options.max_subsets));
  auto basis = exact::independent_columns(a.matrix());
  IntMatrix ab = a.matrix().select_columns(basis);
  // coords[j] expresses a_j in the basis columns, so the functional taking
  // the values v on the basis takes the value <v, coords[j]> on a_j
  std::vector<RatVector> coords(s);
  for (std::size_t j = 0; j < s; ++j) {
    RatVector rhs;
    for (const auto& x : a.column(j)) rhs.emplace_back(x);
    coords[j] = *exact::solve(ab, rhs);
  }
  std::vector<Subset> out;
  const std::uint64_t full = (std::uint64_t{1} << d) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Subset subset;
    bool ok = true;
    for (std::size_t j = 0; j < s && ok; ++j) {
      Rational v = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (mask & (std::uint64_t{1} << i)) v += coords[j][i];
      if (v == 1) subset.push_back(j);
      else if (v != 0) ok = false;
    }
    if (ok && !subset.empty() && subset.size() < s) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CayleyStructure> detect_cayley(const Configuration& a, const DetectOptions& options) {
  const std::size_t s = a.s();
  auto candidates = row_span_indicators(a, options);
  std::vector<std::vector<const Subset*>> by_min(s);
  for (const auto& c : candidates) by_min[c.front()].push_back(&c);

  std::vector<std::vector<Subset>> partitions;
  std::vector<bool> covered(s, false);
  std::vector<Subset> current;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> search = [&](std::size_t next) {
    while (next < s && covered[next]) ++next;
    if (next == s) {
      partitions.push_back(current);
      return;
    }
    for (const Subset* c : by_min[next]) {
      if (++nodes > options.max_subsets)
        throw BudgetExceeded("search space exceeded: partition search passed " +
                             std::to_string(options.max_subsets) + " nodes");
      if (std::any_of(c->begin(), c->end(), [&](std::size_t j) { return covered[j]; })) continue;
      for (auto j : *c) covered[j] = true;
      current.push_back(*c);
      search(next + 1);
      current.pop_back();
      for (auto j : *c) covered[j] = false;
    }
  };
  search(0);

  std::vector<CayleyStructure> out;
  for (const auto& p : partitions)
    if (auto cs = build_structure(a, p)) out.push_back(std::move(*cs));
  std::sort(out.begin(), out.end(), [](const CayleyStructure& x, const CayleyStructure& y) {
    if (x.r != y.r) return x.r > y.r;
    return x.groups < y.groups;
  });
  return out;
}

Configuration cayley_configuration(const std::vector<IntMatrix>& factors) {
  if (factors.size() < 2) throw InvalidInput("a Cayley configuration needs at least two factors");
  const std::size_t k = factors.front().rows();
  std::size_t s = 0;
  for (const auto& f : factors) {
    if (f.rows() != k) throw InvalidInput("Cayley factors must live in the same space");
    if (f.cols() == 0) throw InvalidInput("Cayley factors must be nonempty");
    s += f.cols();
  }
  const std::size_t n = factors.size();
  IntMatrix m(n + k, s);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < factors[i].cols(); ++c, ++col) {
      m(i, col) = 1;
      for (std::size_t t = 0; t < k; ++t) m(n + t, col) = factors[i](t, c);
    }
  return Configuration::from_spanning_rows(m);
}

std::size_t minkowski_dimension(const CayleyStructure& cs, const std::vector<std::size_t>& subset) {
  std::vector<IntVector> vectors;
  for (auto i : subset) {
    const IntMatrix& f = cs.factors.at(i);
    for (std::size_t c = 1; c < f.cols(); ++c) {
      IntVector v(f.rows());
      for (std::size_t t = 0; t < f.rows(); ++t) v[t] = f(t, c) - f(t, 0);
      vectors.push_back(std::move(v));
    }
  }
  if (vectors.empty() || cs.r == 0) return 0;
  return exact::rank(IntMatrix::from_columns(vectors, cs.r));
}

Essentiality is_essential(const CayleyStructure& cs) {
  Essentiality out;
  out.essential = true;
  for (std::size_t size = 1; size <= cs.r && out.essential; ++size) {
    for_each_combination(cs.r + 1, size, [&](const Subset& subset) {
      if (minkowski_dimension(cs, subset) >= size) return true;
      out.essential = false;
      out.violating = subset;
      return false;
    });
  }
  return out;
}

std::optional<std::vector<std::size_t>> resultant_defect(const CayleyStructure& cs) {
  std::optional<Subset> found;
  for (std::size_t size = 2; size <= cs.r + 1 && !found; ++size) {
    for_each_combination(cs.r + 1, size, [&](const Subset& subset) {
      if (minkowski_dimension(cs, subset) + 2 > size) return true;
      found = subset;
      return false;
    });
  }
  return found;
}

std::optional<std::pair<Integer, std::size_t>> detect_simplex_multiple(const Configuration& a) {
  polytope::FaceLattice lattice(a);
  const auto& vertices = lattice.vertices();
  const std::size_t d = a.d();
  if (vertices.size() != d) return std::nullopt;
  IntMatrix av = a.matrix().select_columns(vertices);
  Integer r = 1;
  for (std::size_t j = 0; j < a.s(); ++j) {
    RatVector rhs;
    for (const auto& x : a.column(j)) rhs.emplace_back(x);
    auto bary = *exact::solve(av, rhs);
    r = lcm(r, exact::common_denominator(bary));
  }
  const std::size_t q = d - 1;
  // number of lattice points of r * Delta_q is binomial(r + q, q)
  Integer count;
  mpz_bin_ui(count.get_mpz_t(), Integer(r + q).get_mpz_t(), q);
  if (count != a.s()) return std::nullopt;
  return std::make_pair(r, q);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Rational:
      return "Rational";
    case Verdict::NotRational:
      return "NotRational";
    case Verdict::Degenerate:
      return "Degenerate";
    case Verdict::ConjecturallyNotRational:
    default:
      return "ConjecturallyNotRational";
  }
}

Classification classify(const Configuration& a, const DetectOptions& options) {
  Classification out;
  if (auto apex = polytope::is_pyramid(a)) {
    out.verdict = Verdict::Degenerate;
    out.rule = "pyramid";
    out.citation = "a pyramid has A-discriminant 1, so it is not gkz-rational";
    out.apex = apex;
    return out;
  }

  auto structures = detect_cayley(a, options);
  for (const auto& cs : structures) {
    if (!is_essential(cs).essential) continue;
    out.verdict = Verdict::Rational;
    out.rule = "essential-cayley";
    out.citation = "an essential Cayley configuration is gkz-rational";
    out.cayley = cs;
    return out;
  }
  for (const auto& cs : structures) {
    auto defect = resultant_defect(cs);
    if (!defect) continue;
    out.verdict = Verdict::Degenerate;
    out.rule = "cayley-resultant-defect";
    out.citation =
        "a Cayley configuration with a Minkowski sum of factors of dimension at most |I| - 2 has sparse resultant 1, "
        "hence A-discriminant 1";
    out.cayley = cs;
    out.defect_subset = *defect;
    return out;
  }

  polytope::FaceLattice lattice(a);
  std::optional<circuits::Circuit> witness;
  circuits::for_each_circuit(a, [&](const circuits::Circuit& c) {
    if (circuits::is_balanced(c).balanced || !lattice.is_spanning(c.support)) return true;
    witness = c;
    return false;
  });
  if (witness) {
    out.verdict = Verdict::NotRational;
    out.rule = "unbalanced-spanning-circuit";
    out.citation = "a configuration containing an unbalanced spanning circuit is not gkz-rational";
    out.circuit = witness;
    return out;
  }

  auto inner = lattice.interior_points();
  if (!inner.empty()) {
    out.verdict = Verdict::NotRational;
    out.rule = "interior-point";
    out.citation = "a gkz-rational configuration has no interior point";
    out.interior_point = inner.front();
    return out;
  }

  if (a.d() <= 4) {
    out.verdict = Verdict::NotRational;
    out.rule = "dimension-at-most-4";
    out.citation = "for d <= 4 a configuration is gkz-rational only if it is an essential Cayley configuration";
    return out;
  }

  if (a.s() == a.d() + 1) {
    auto kernel = exact::integer_kernel(a.matrix());
    if (kernel.size() == 1 && std::none_of(kernel[0].begin(), kernel[0].end(), [](const Integer& x) { return x == 0; }))
      throw std::logic_error("circuit configuration reached the conjectural branch");
  }

  out.verdict = Verdict::ConjecturallyNotRational;
  out.rule = "conjecture-essential-cayley";
  out.citation = "conjecturally gkz-rational exactly when affinely isomorphic to an essential Cayley configuration";
  out.simplex_multiple = detect_simplex_multiple(a);
  if (out.simplex_multiple)
    out.note = "A is " + exact::to_string(out.simplex_multiple->first) + " times a " +
               std::to_string(out.simplex_multiple->second) +
               "-simplex; multiples of simplices are never gkz-rational";
  return out;
}

}  // namespace gkz::cayley

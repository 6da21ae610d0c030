// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "gkz/cayley/cayley.hpp"
#include "gkz/circuits/circuit.hpp"
#include "gkz/cli/json_io.hpp"
#include "gkz/errors.hpp"
#include "gkz/exactalg/parser.hpp"
#include "gkz/polytope/catalog.hpp"
#include "gkz/polytope/faces.hpp"
#include "gkz/residue/residue.hpp"
#include "gkz/weyl/weyl.hpp"

using namespace gkz;
using exact::Integer;
using exact::IntMatrix;
using exact::IntVector;
using exact::LaurentPolynomial;
using exact::parse_expression;
using exact::Rational;
using exact::RatVector;
using polytope::Configuration;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

const char* kResultant =
    "x1^2*x6^2 - x1*x2*x5*x6 - 2*x1*x3*x4*x6 + x1*x3*x5^2 + x2^2*x4*x6 - x2*x3*x4*x5 + x3^2*x4^2";
const char* kQuotient =
    "(x1*x6 - x3*x4)/(x1^2*x6^2 - x1*x2*x5*x6 - 2*x1*x3*x4*x6 + x1*x3*x5^2 + x2^2*x4*x6 - x2*x3*x4*x5 + "
    "x3^2*x4^2)";
const char* kClosing = "x4*(-x1^4*x4^2 - 6*x1^2*x2^2*x3*x4 + 3*x2^4*x3^2)/(x2^2*(x2^2*x3 + x1^2*x4)^3)";
const char* kClosingDerivative = "3*x3*(x1^4*x4^2 - 6*x1^2*x2^2*x3*x4 + x2^4*x3^2)/(x2^2*x3 + x1^2*x4)^4";

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << s << "s";
  return ss.str();
}

struct Fixture {
  std::string name;
  Configuration config;
  std::string expected;
};

std::vector<Fixture> load_fixtures() {
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(GKZ_FIXTURE_DIR))
    if (e.path().extension() == ".json") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<Fixture> out;
  for (const auto& p : paths) {
    std::ifstream in(p);
    auto j = cli::json::parse(in);
    out.push_back({j["name"].get<std::string>(), cli::configuration_from_json(j),
                   j["expected"]["verdict"].get<std::string>()});
  }
  return out;
}

const Fixture& fixture(const std::vector<Fixture>& all, const std::string& name) {
  for (const auto& f : all)
    if (f.name == name) return f;
  throw std::runtime_error("missing fixture " + name);
}

Rational fraction(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational power(const Rational& x, Integer e) {
  Rational base = e < 0 ? Rational(1) / x : x;
  if (e < 0) e = -e;
  Rational out = 1;
  for (Integer k = 0; k < e; ++k) out *= base;
  return out;
}

circuits::Circuit sole_circuit(const Configuration& a) {
  auto all = circuits::enumerate_circuits(a);
  if (all.size() != 1) throw std::logic_error("expected exactly one circuit");
  return all.front();
}

// 1. Classification corpus.
Outcome classification_corpus() {
  Outcome o;
  const auto t0 = Clock::now();
  auto fixtures = load_fixtures();
  std::map<std::string, std::string> verdicts;
  for (const auto& f : fixtures) {
    auto c = cayley::classify(f.config);
    verdicts[f.name] = cayley::to_string(c.verdict);
    o.require(verdicts[f.name] == f.expected, f.name + ": expected " + f.expected + ", got " + verdicts[f.name]);
  }
  const std::pair<const char*, const char*> named[] = {
      {"gauss_square", "Rational"},      {"scroll", "Rational"},          {"product_1_2", "Degenerate"},
      {"product_2_2", "Rational"},       {"veronese", "NotRational"},     {"wedge_1_2", "NotRational"},
      {"six_points_1_1", "NotRational"}, {"seven_points_1_2", "NotRational"}};
  for (const auto& [name, verdict] : named)
    o.require(verdicts.count(name) && verdicts[name] == verdict, std::string(name) + " must be " + verdict);
  for (long p = 1; p <= 2; ++p)
    for (long q = 1; q <= 2; ++q) {
      auto v = verdicts["product_" + std::to_string(p) + "_" + std::to_string(q)];
      o.require((v == "Rational") == (p == q), "product of simplices rational exactly when p = q");
    }

  std::size_t planar = 0;
  for (unsigned mask = 0; mask < (1u << 7); ++mask) {
    std::vector<long> xs;
    for (long x = 0; x <= 6; ++x)
      if (mask & (1u << x)) xs.push_back(x);
    if (xs.size() < 2) continue;
    IntMatrix m(2, xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
      m(0, j) = 1;
      m(1, j) = xs[j];
    }
    auto c = cayley::classify(Configuration(m));
    o.require(c.verdict == cayley::Verdict::NotRational || c.verdict == cayley::Verdict::Degenerate,
              "planar configuration classified " + cayley::to_string(c.verdict));
    ++planar;
  }
  double t = seconds_since(t0);
  o.require(t < 60, "runtime " + fmt(t) + " exceeds 60s");
  o.detail = std::to_string(fixtures.size()) + " fixtures, " + std::to_string(planar) + " d = 2 configurations, " + fmt(t);
  return o;
}

// 2. Circuit theory on all small circuits.
Outcome circuit_theory(const std::vector<IntVector>& vectors) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t balanced = 0, per_n_coincidences = 0;
  for (const auto& b : vectors) {
    auto a = circuits::configuration_from_circuit(b);
    auto c = sole_circuit(a);
    bool bal = circuits::is_balanced(c).balanced;
    balanced += bal;

    bool pairs = false;
    for (const auto& cs : cayley::detect_cayley(a)) {
      bool all_pairs = std::all_of(cs.groups.begin(), cs.groups.end(), [](const auto& g) { return g.size() == 2; });
      if (all_pairs && cayley::is_essential(cs).essential) pairs = true;
    }
    std::string label;
    for (const auto& x : b) label += x.get_str() + " ";
    o.require(bal == pairs, "Cayley criterion disagrees with balance for b = " + label);

    bool all_n = true;
    for (long n = 0; n <= 20; ++n) {
      bool holds = circuits::product_identity_holds(c, Integer(n));
      all_n = all_n && holds;
      if (holds != bal) ++per_n_coincidences;
    }
    o.require(all_n == bal, "product identity disagrees with balance for b = " + label);
  }
  o.detail = std::to_string(vectors.size()) + " circuits (" + std::to_string(balanced) + " balanced), " +
             std::to_string(per_n_coincidences) + " single-n coincidences, " + fmt(seconds_since(t0));
  return o;
}

// 3. Hypergeometric certification.
Outcome certification() {
  Outcome o;
  double slowest = 0;
  auto timed = [&](const Configuration& a, const std::string& text) {
    const auto t0 = Clock::now();
    auto cert = weyl::verify_hypergeometric(a, parse_expression(text, a.s()));
    double t = seconds_since(t0);
    slowest = std::max(slowest, t);
    o.require(t < 120, "certification of " + text + " took " + fmt(t));
    return cert;
  };
  auto square = polytope::catalog::gauss_square();
  auto c1 = timed(square, "1/(x1*x2 - x3*x4)");
  o.require(c1.certified() && c1.beta == RatVector{-1, -1, -1}, "1/(x1x2 - x3x4) with beta (-1,-1,-1)");

  auto scroll = polytope::catalog::scroll();
  auto c2 = timed(scroll, std::string("1/(") + kResultant + ")");
  o.require(!c2.certified() && c2.counterexample.has_value(), "1/R refuted with a counterexample operator");
  o.require(timed(scroll, kQuotient).certified(), "(x1x6 - x3x4)/R certified");

  Configuration closing(IntMatrix{{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 2}});
  auto f = parse_expression(kClosing, 4);
  o.require(timed(closing, kClosing).certified(), "closing function certified");
  auto df = f.derivative(3);
  auto display = parse_expression(kClosingDerivative, 4);
  o.require(df == display, "x4-derivative equals the displayed derivative");
  LaurentPolynomial display_num = display.numerator();
  auto expected_terms =
      parse_expression("3*x1^4*x3*x4^2 - 18*x1^2*x2^2*x3^2*x4 + 3*x2^4*x3^3", 4).numerator();
  o.require(display_num == expected_terms && display_num.size() == 3, "displayed numerator has the three terms");
  o.require(timed(closing, df.to_string()).certified(), "x4-derivative certified");

  auto fixtures = load_fixtures();
  const auto& prism = fixture(fixtures, "product_2_2");
  auto c5 = timed(prism.config,
                  "1/(x1*x5*x9 - x1*x6*x8 - x2*x4*x9 + x2*x6*x7 + x3*x4*x8 - x3*x5*x7)");
  o.require(c5.certified(), "1/det certified on Delta2 x Delta2");
  o.detail = "slowest run " + fmt(slowest);
  return o;
}

// 4. Circuit discriminants and lambda.
Outcome discriminants() {
  Outcome o;
  auto quad = sole_circuit(circuits::configuration_from_circuit(IntVector{1, -2, 1}));
  auto disc = circuits::circuit_discriminant(quad);
  auto expected = parse_expression("x2^2 - 4*x1*x3", 3).numerator();
  o.require(disc.integer_form == expected, "integer-cleared discriminant of (1,-2,1) is x2^2 - 4x1x3");

  // elimination oracle: Res(f, f') = -x3 * disc(f) for f = x1 + x2 t + x3 t^2
  std::vector<LaurentPolynomial> f{LaurentPolynomial::variable(3, 0), LaurentPolynomial::variable(3, 1),
                                   LaurentPolynomial::variable(3, 2)};
  std::vector<LaurentPolynomial> df{LaurentPolynomial::variable(3, 1),
                                    LaurentPolynomial::variable(3, 2) * LaurentPolynomial::constant(3, 2)};
  auto res = residue::sylvester_resultant(f, df, 3);
  o.require(res == disc.integer_form * LaurentPolynomial::variable(3, 2) * LaurentPolynomial::constant(3, -1),
            "discriminant divides Res(f, f') with cofactor -x3");

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> len(3, 5);
  std::uniform_int_distribution<long> coord(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    auto b = testing::random_circuit_vector(rng, len(rng), 4);
    auto a = circuits::configuration_from_circuit(b);
    auto c = sole_circuit(a);
    auto d = circuits::circuit_discriminant(c);

    Rational expected_lambda = c.rho % 2 == 0 ? Rational(1) : Rational(-1);
    for (const auto& x : c.b) {
      if (x < 0) expected_lambda *= power(Rational(-x), -x);
      if (x > 0) expected_lambda /= power(Rational(x), x);
    }
    o.require(d.lambda == expected_lambda, "lambda matches the closed form");

    // dual point: f(s) = sum x_j s^{a_j} is singular at s = t when x_j = b_j t^{-a_j}
    RatVector t;
    for (std::size_t i = 0; i < a.d(); ++i) {
      long v = coord(rng);
      t.push_back(fraction(v == 0 ? 7 : v, 1 + trial % 3));
    }
    RatVector x;
    for (std::size_t j = 0; j < a.s(); ++j) {
      Rational mono = 1;
      for (std::size_t i = 0; i < a.d(); ++i) mono *= power(t[i], -a.matrix()(i, j));
      x.push_back(Rational(c.b[j]) * mono);
    }
    Rational f_at = 0;
    std::vector<Rational> log_grad(a.d(), Rational(0));
    for (std::size_t j = 0; j < a.s(); ++j) {
      Rational mono = 1;
      for (std::size_t i = 0; i < a.d(); ++i) mono *= power(t[i], a.matrix()(i, j));
      f_at += x[j] * mono;
      for (std::size_t i = 0; i < a.d(); ++i) log_grad[i] += Rational(a.matrix()(i, j)) * x[j] * mono;
    }
    bool singular = f_at == 0 && std::all_of(log_grad.begin(), log_grad.end(), [](const Rational& g) { return g == 0; });
    o.require(singular, "constructed point is a singular point of f");
    o.require(d.rational_form.evaluate(x) == 0, "discriminant vanishes at the dual point");
    RatVector moved = x;
    moved[c.support.front()] *= 2;
    o.require(d.rational_form.evaluate(moved) != 0, "discriminant is nonzero off the dual point");
  }
  o.detail = "(1,-2,1) matched, 50 random circuits";
  return o;
}

// 5. Sylvester resultant.
Outcome resultants() {
  Outcome o;
  std::vector<LaurentPolynomial> f, g;
  for (std::size_t k = 0; k < 3; ++k) {
    f.push_back(LaurentPolynomial::variable(6, k));
    g.push_back(LaurentPolynomial::variable(6, 3 + k));
  }
  auto res = residue::sylvester_resultant(f, g, 6);
  o.require(res.to_string() == kResultant, "symbolic quadrics resultant text: " + res.to_string());

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-7, 7);
  std::uniform_int_distribution<int> deg(1, 3);
  auto from_roots = [](const Rational& lc, const RatVector& roots) {
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
  };
  auto random_roots = [&](int n) {
    RatVector out;
    for (int k = 0; k < n; ++k) out.push_back(fraction(d(rng), 1 + std::abs(d(rng)) % 3));
    return out;
  };
  int common = 0, coprime = 0;
  while (common < 100) {
    auto alpha = random_roots(deg(rng)), beta = random_roots(deg(rng));
    beta[0] = alpha[0];
    o.require(residue::sylvester_resultant(from_roots(2, alpha), from_roots(-3, beta)) == 0, "common root gives 0");
    ++common;
  }
  while (coprime < 100) {
    auto alpha = random_roots(deg(rng)), beta = random_roots(deg(rng));
    bool shared = false;
    for (const auto& a : alpha)
      for (const auto& b : beta) shared = shared || a == b;
    if (shared) continue;
    Rational value = residue::sylvester_resultant(from_roots(1, alpha), from_roots(1, beta));
    Rational product = 1;
    for (const auto& a : alpha)
      for (const auto& b : beta) product *= a - b;
    o.require(value != 0 && value == product, "coprime instance matches the root product");
    ++coprime;
  }
  o.detail = "display reproduced, 100 common-root and 100 coprime instances";
  return o;
}

// 6. Toric residues.
Outcome residues() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(6);
  int compared = 0, instances = 0, calibrations = 0;
  while (instances < 100) {
    std::int64_t m = 2 + instances % 2;
    residue::ResidueProblem p{1, m, {testing::random_rationals(rng, m + 1, -9, 9, true),
                                     testing::random_rationals(rng, m + 1, -9, 9, true)}, {}};
    if (residue::sylvester_resultant(p.coeffs[0], p.coeffs[1]) == 0) continue;
    bool simple = true;
    RatVector values;
    for (const auto& a : residue::interior_exponents(1, m)) {
      try {
        values.push_back(residue::univariate_residue_oracle(p.coeffs[0], p.coeffs[1], a[0]));
      } catch (const DomainError&) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;
    residue::ToricResidue res(p);
    auto exps = residue::interior_exponents(1, m);
    for (std::size_t k = 0; k < exps.size(); ++k) {
      o.require(res.residue(exps[k]) == values[k], "residue equals the univariate oracle");
      ++compared;
    }
    o.require(res.jacobian_residue() == res.calibration_constant(), "Res(j) = m^r");
    ++calibrations;
    ++instances;
  }

  auto quotient = parse_expression(kQuotient, 6);
  for (int k = 0; k < 25;) {
    residue::ResidueProblem p{1, 2, {testing::random_rationals(rng, 3, -9, 9), testing::random_rationals(rng, 3, -9, 9)},
                              {2}};
    RatVector x = p.coeffs[0];
    x.insert(x.end(), p.coeffs[1].begin(), p.coeffs[1].end());
    if (residue::sylvester_resultant(p.coeffs[0], p.coeffs[1]) == 0) continue;
    residue::ToricResidue res(p);
    o.require(res.residue(p.a) == quotient.evaluate(x), "quadrics residue equals (x1x6 - x3x4)/R");
    o.require(res.jacobian_residue() == res.calibration_constant(), "Res(j) = m^r");
    ++calibrations;
    ++k;
  }

  for (int k = 0; k < 25;) {
    residue::ResidueProblem p{2, 1, {}, {1, 1}};
    for (int j = 0; j < 3; ++j) p.coeffs.push_back(testing::random_rationals(rng, 3, -9, 9));
    const auto& r = p.coeffs;
    Rational det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
                   r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    if (det == 0) continue;
    residue::ToricResidue res(p);
    o.require(res.residue(p.a) == 1 / det, "linear forms residue equals 1/det");
    o.require(res.jacobian_residue() == res.calibration_constant(), "Res(j) = m^r");
    ++calibrations;
    ++k;
  }

  auto w = residue::residue_witness(2, 2);
  o.require(w.function == quotient, "residue witness equals (x1x6 - x3x4)/R");
  o.require(w.function.to_string() == kQuotient, "residue witness text: " + w.function.to_string());
  o.require(w.certificate.certified(), "residue witness certified");

  double t = seconds_since(t0);
  o.require(t < 300, "runtime " + fmt(t) + " exceeds 5 min");
  o.detail = std::to_string(compared) + " oracle comparisons on " + std::to_string(instances) + " instances, " +
             std::to_string(calibrations) + " calibrations, " + fmt(t);
  return o;
}

// 7. Volume and interior-point checks.
Outcome volumes(const std::vector<IntVector>& vectors) {
  Outcome o;
  for (const auto& b : vectors) {
    auto a = circuits::configuration_from_circuit(b);
    auto c = sole_circuit(a);
    o.require(polytope::normalized_volume(a) == c.rho, "normalized volume equals rho");
  }
  o.require(polytope::normalized_volume(polytope::catalog::gauss_square()) == 2, "volume of the Gauss square is 2");
  std::size_t rational = 0;
  for (const auto& f : load_fixtures()) {
    if (cayley::classify(f.config).verdict != cayley::Verdict::Rational) continue;
    ++rational;
    o.require(polytope::interior_points(f.config).empty(), f.name + " is rational but has an interior point");
  }
  o.detail = std::to_string(vectors.size()) + " circuit volumes, " + std::to_string(rational) + " rational fixtures";
  return o;
}

// 8. Octahedron series.
Outcome octahedron() {
  Outcome o;
  std::size_t checks = 0;
  const long params[][3] = {{1, 1, 1}, {1, 2, 1}, {2, 3, 2}};
  for (const auto& pqk : params) {
    const long p = pqk[0], q = pqk[1], k = pqk[2];
    for (long m = 0; m <= 10; ++m)
      for (long n = 0; n <= 10; ++n) {
        Rational f = weyl::octahedron_coefficient(p, q, k, m, n);
        auto [r, s] = weyl::octahedron_quotients(p, q, k, m, n, 0, 0);
        o.require(weyl::octahedron_coefficient(p, q, k, m + 1, n) / f == r, "F(m+1,n)/F(m,n) = R(m,n)");
        o.require(weyl::octahedron_coefficient(p, q, k, m, n + 1) / f == s, "F(m,n+1)/F(m,n) = S(m,n)");
        o.require(f == weyl::octahedron_coefficient(p, q, k, n, m), "F(m,n) = F(n,m)");
        checks += 3;
      }
  }
  o.detail = std::to_string(checks) + " identities on 0 <= m, n <= 10";
  return o;
}

}  // namespace

int main() {
  auto vectors = testing::circuit_multisets(3, 7, 4);
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"classification corpus", classification_corpus},
      {"circuit theory", [&] { return circuit_theory(vectors); }},
      {"hypergeometric certification", certification},
      {"discriminant formula", discriminants},
      {"resultant", resultants},
      {"residues", residues},
      {"volume and interior points", [&] { return volumes(vectors); }},
      {"octahedron series", octahedron}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
    failed += !o.pass;
  }
  std::cout.flush();
  return failed == 0 ? 0 : 1;
}

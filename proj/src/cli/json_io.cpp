#include "gkz/cli/json_io.hpp"

#include "gkz/errors.hpp"

namespace gkz::cli {

namespace {

exact::Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return exact::Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    exact::Rational q = exact::parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw InvalidInput("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

std::size_t size_from_json(const json& j, const char* field) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw InvalidInput(std::string("field '") + field + "' must be a nonnegative integer");
  return j.get<std::size_t>();
}

const json& require(const json& j, const char* field) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(field);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + field + "'");
  return *it;
}

}  // namespace

polytope::Configuration configuration_from_json(const json& j) {
  const json& rows = require(j, "matrix");
  if (!rows.is_array() || rows.empty()) throw InvalidInput("'matrix' must be a nonempty array of rows");
  std::vector<exact::IntVector> data;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InvalidInput("every matrix row must be an array");
    exact::IntVector v;
    for (const auto& x : row) v.push_back(integer_from_json(x));
    if (!data.empty() && v.size() != data.front().size()) throw InvalidInput("matrix rows have different lengths");
    data.push_back(std::move(v));
  }
  if (data.front().empty()) throw InvalidInput("matrix has no columns");
  if (j.contains("d") && size_from_json(j["d"], "d") != data.size())
    throw InvalidInput("field 'd' does not match the number of matrix rows");
  if (j.contains("s") && size_from_json(j["s"], "s") != data.front().size())
    throw InvalidInput("field 's' does not match the number of matrix columns");
  return polytope::Configuration(exact::IntMatrix::from_rows(data, data.front().size()));
}

json configuration_to_json(const polytope::Configuration& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.d(); ++i) rows.push_back(integers_to_json(a.matrix().row(i)));
  return json{{"d", a.d()}, {"s", a.s()}, {"matrix", rows}};
}

exact::Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return exact::Rational(exact::Integer(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  throw InvalidInput("expected a rational \"p/q\" string, got " + j.dump());
}

json rational_to_json(const exact::Rational& q) { return exact::to_string(q); }

json rationals_to_json(const exact::RatVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

json integers_to_json(const exact::IntVector& v) {
  json out = json::array();
  for (const auto& z : v) {
    if (z.fits_slong_p())
      out.push_back(z.get_si());
    else
      out.push_back(z.get_str());
  }
  return out;
}

residue::ResidueProblem residue_problem_from_json(const json& j) {
  residue::ResidueProblem p;
  p.r = size_from_json(require(j, "r"), "r");
  if (p.r == 0) throw InvalidInput("field 'r' must be positive");
  const json& m = require(j, "m");
  if (!m.is_number_integer() || m.get<std::int64_t>() < 1) throw InvalidInput("field 'm' must be a positive integer");
  p.m = m.get<std::int64_t>();
  const json& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) throw InvalidInput("'coeffs' must be an array of rows");
  for (const auto& row : coeffs) {
    if (!row.is_array()) throw InvalidInput("every coefficient row must be an array");
    exact::RatVector v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    p.coeffs.push_back(std::move(v));
  }
  if (j.contains("a")) {
    if (!j["a"].is_array()) throw InvalidInput("'a' must be an array of integers");
    for (const auto& x : j["a"]) {
      if (!x.is_number_integer()) throw InvalidInput("'a' must be an array of integers");
      p.a.push_back(x.get<std::int64_t>());
    }
  }
  return p;
}

json residue_problem_to_json(const residue::ResidueProblem& p) {
  json coeffs = json::array();
  for (const auto& row : p.coeffs) coeffs.push_back(rationals_to_json(row));
  return json{{"r", p.r}, {"m", p.m}, {"coeffs", coeffs}, {"a", p.a}};
}

json indices_to_json(const std::vector<std::size_t>& zero_based) {
  json out = json::array();
  for (auto i : zero_based) out.push_back(i + 1);
  return out;
}

json circuit_to_json(const circuits::Circuit& c) {
  auto balance = circuits::is_balanced(c);
  return json{{"support", indices_to_json(c.support)},
              {"b", integers_to_json(c.compressed())},
              {"rho", c.rho.get_si()},
              {"balanced", balance.balanced}};
}

json cayley_to_json(const cayley::CayleyStructure& cs) {
  json groups = json::array();
  for (const auto& g : cs.groups) groups.push_back(indices_to_json(g));
  json factors = json::array();
  for (const auto& f : cs.factors) {
    json rows = json::array();
    for (std::size_t i = 0; i < f.rows(); ++i) rows.push_back(integers_to_json(f.row(i)));
    factors.push_back(rows);
  }
  auto ess = cayley::is_essential(cs);
  json out{{"r", cs.r}, {"groups", groups}, {"factors", factors}, {"essential", ess.essential}};
  if (!ess.essential) out["violating"] = ess.violating;
  return out;
}

json face_to_json(const polytope::Face& f) {
  return json{{"indices", indices_to_json(f.indices)}, {"dimension", f.dimension}};
}

json classification_to_json(const cayley::Classification& c) {
  json witness = json::object();
  if (c.cayley) witness["cayley"] = cayley_to_json(*c.cayley);
  if (c.circuit) witness["circuit"] = circuit_to_json(*c.circuit);
  if (c.apex) witness["apex"] = *c.apex + 1;
  if (c.interior_point) witness["interior_point"] = *c.interior_point + 1;
  if (!c.defect_subset.empty()) witness["defect_subset"] = c.defect_subset;
  if (c.simplex_multiple)
    witness["simplex_multiple"] = json{{"r", c.simplex_multiple->first.get_si()}, {"q", c.simplex_multiple->second}};
  json out{{"verdict", cayley::to_string(c.verdict)}, {"rule", c.rule}, {"citation", c.citation}, {"witness", witness}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

json certificate_to_json(const weyl::Certificate& c) {
  json out{{"status", c.certified() ? "certified" : "refuted"},
           {"beta", c.beta ? rationals_to_json(*c.beta) : json(nullptr)},
           {"generators", c.generators}};
  if (c.counterexample) {
    out["counterexample"] = json{{"operator", c.counterexample->to_string()},
                                 {"u", c.counterexample->u},
                                 {"v", c.counterexample->v},
                                 {"residual", c.residual ? c.residual->to_string() : std::string()}};
  }
  if (c.inhomogeneous_row) out["inhomogeneous_row"] = *c.inhomogeneous_row + 1;
  return out;
}

}  // namespace gkz::cli

#pragma once

#include <json.hpp>

#include "gkz/cayley/cayley.hpp"
#include "gkz/polytope/faces.hpp"
#include "gkz/residue/residue.hpp"
#include "gkz/weyl/weyl.hpp"

namespace gkz::cli {

using json = nlohmann::ordered_json;

/// {"d": int, "s": int, "matrix": [[int, ...], ...]}. Integer entries may be
/// JSON numbers or decimal strings; d and s are optional but must agree with
/// the matrix when present. Throws InvalidInput.
polytope::Configuration configuration_from_json(const json& j);
json configuration_to_json(const polytope::Configuration& a);

/// Rationals travel as "p/q" strings ("p" when the denominator is 1).
/// Reading also accepts JSON integers.
exact::Rational rational_from_json(const json& j);
json rational_to_json(const exact::Rational& q);
json rationals_to_json(const exact::RatVector& v);
json integers_to_json(const exact::IntVector& v);

/// {"r": int, "m": int, "coeffs": [["p/q", ...], ...], "a": [int, ...]}.
residue::ResidueProblem residue_problem_from_json(const json& j);
json residue_problem_to_json(const residue::ResidueProblem& p);

/// Column indices are reported 1-based, matching the x1..xs naming.
json indices_to_json(const std::vector<std::size_t>& zero_based);

json circuit_to_json(const circuits::Circuit& c);
json cayley_to_json(const cayley::CayleyStructure& cs);
json face_to_json(const polytope::Face& f);

/// {"verdict": str, "rule": str, "citation": str, "witness": {...}}.
json classification_to_json(const cayley::Classification& c);

/// {"status": "certified" | "refuted", "beta": [...] | null,
///  "generators": n, "counterexample": {...}?}.
json certificate_to_json(const weyl::Certificate& c);

}  // namespace gkz::cli

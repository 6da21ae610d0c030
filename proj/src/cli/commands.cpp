#include "gkz/cli/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gkz/errors.hpp"
#include "gkz/exactalg/parser.hpp"

namespace gkz::cli {

namespace {

using Clock = std::chrono::steady_clock;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string braces(const std::vector<std::size_t>& zero_based) {
  std::string out = "{";
  for (std::size_t k = 0; k < zero_based.size(); ++k) out += (k ? "," : "") + std::to_string(zero_based[k] + 1);
  return out + "}";
}

std::string partition_text(const cayley::CayleyStructure& cs) {
  std::string out;
  for (std::size_t g = 0; g < cs.groups.size(); ++g) out += (g ? "/" : "") + braces(cs.groups[g]);
  return out;
}

Report start(const char* command, const std::string& text) {
  Report r;
  r.command = command;
  r.input_digest = digest(text);
  return r;
}

cayley::DetectOptions detect_options(const Options& opt) {
  cayley::DetectOptions d;
  d.max_subsets = opt.max_subsets;
  return d;
}

void print_human(const Report& r, std::ostream& out) {
  for (const auto& line : r.summary) out << line << "\n";
  for (const auto& c : r.citations) out << "rule: " << c << "\n";
}

}  // namespace

json Report::to_json() const {
  return json{{"command", command},
              {"input_digest", input_digest},
              {"result", result},
              {"citations", citations},
              {"seconds", seconds},
              {"exit_code", exit_code}};
}

std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report cmd_classify(const std::string& text, const Options& opt) {
  Report r = start("classify", text);
  auto a = configuration_from_json(parse_json(text));
  auto c = cayley::classify(a, detect_options(opt));
  r.result = classification_to_json(c);
  r.citations.push_back(c.citation);
  r.summary.push_back("verdict: " + cayley::to_string(c.verdict) + " (" + c.rule + ")");
  if (c.cayley) r.summary.push_back("witness: Cayley partition " + partition_text(*c.cayley));
  if (c.circuit) {
    std::string b;
    for (const auto& x : c.circuit->compressed()) b += (b.empty() ? "" : ",") + x.get_str();
    r.summary.push_back("witness: circuit " + braces(c.circuit->support) + " with b = (" + b + ")");
  }
  if (c.apex) r.summary.push_back("witness: apex column " + std::to_string(*c.apex + 1));
  if (c.interior_point) r.summary.push_back("witness: interior column " + std::to_string(*c.interior_point + 1));
  if (!c.note.empty()) r.summary.push_back("note: " + c.note);
  return r;
}

Report cmd_circuits(const std::string& text, const Options&) {
  Report r = start("circuits", text);
  auto a = configuration_from_json(parse_json(text));
  polytope::FaceLattice lattice(a);
  json list = json::array();
  std::size_t spanning = 0;
  for (const auto& c : circuits::enumerate_circuits(a)) {
    json entry = circuit_to_json(c);
    bool span = lattice.is_spanning(c.support);
    entry["spanning"] = span;
    spanning += span;
    r.summary.push_back("circuit " + braces(c.support) + (entry["balanced"].get<bool>() ? " balanced" : " unbalanced") +
                        (span ? " spanning" : ""));
    list.push_back(std::move(entry));
  }
  r.summary.push_back(std::to_string(list.size()) + " circuits, " + std::to_string(spanning) + " spanning");
  r.result = json{{"circuits", list}};
  return r;
}

Report cmd_faces(const std::string& text, const Options&) {
  Report r = start("faces", text);
  auto a = configuration_from_json(parse_json(text));
  polytope::FaceLattice lattice(a);
  json faces = json::array();
  for (const auto& f : lattice.faces()) faces.push_back(face_to_json(f));
  auto interior = lattice.interior_points();
  auto volume = polytope::normalized_volume(a);
  r.result = json{{"faces", faces},
                  {"vertices", indices_to_json(lattice.vertices())},
                  {"facets", lattice.facets().size()},
                  {"interior_points", indices_to_json(interior)},
                  {"normalized_volume", volume.get_str()}};
  r.summary.push_back(std::to_string(faces.size()) + " faces, " + std::to_string(lattice.facets().size()) + " facets, " +
                      std::to_string(lattice.vertices().size()) + " vertices");
  r.summary.push_back("vertices: " + braces(lattice.vertices()));
  r.summary.push_back("interior points: " + braces(interior));
  r.summary.push_back("normalized volume: " + volume.get_str());
  return r;
}

Report cmd_cayley(const std::string& text, const Options& opt) {
  Report r = start("cayley", text);
  auto a = configuration_from_json(parse_json(text));
  json list = json::array();
  for (const auto& cs : cayley::detect_cayley(a, detect_options(opt))) {
    json entry = cayley_to_json(cs);
    r.summary.push_back("partition " + partition_text(cs) + ", essential = " +
                        (entry["essential"].get<bool>() ? "true" : "false"));
    list.push_back(std::move(entry));
  }
  if (list.empty()) r.summary.push_back("no Cayley structure");
  r.result = json{{"structures", list}};
  return r;
}

Report cmd_verify(const std::string& text, const std::string& function, const Options& opt) {
  Report r = start("verify", text + "\n" + function);
  auto a = configuration_from_json(parse_json(text));
  auto f = exact::parse_expression(function, a.s());
  groebner::StepBudget budget(opt.budget);
  auto cert = weyl::verify_hypergeometric(a, f, budget);
  r.result = certificate_to_json(cert);
  r.result["function"] = f.to_string();
  r.citations.push_back("a function is A-hypergeometric when it is A-homogeneous and annihilated by every toric operator");
  if (cert.certified()) {
    std::string beta;
    for (const auto& b : *cert.beta) beta += (beta.empty() ? "" : ", ") + exact::to_string(b);
    r.summary.push_back("certified: A-hypergeometric of degree (" + beta + ")");
  } else {
    r.exit_code = Refuted;
    if (cert.inhomogeneous_row)
      r.summary.push_back("refuted: not homogeneous for row " + std::to_string(*cert.inhomogeneous_row + 1));
    if (cert.counterexample) {
      r.summary.push_back("refuted: " + cert.counterexample->to_string() + " does not annihilate the function");
      r.summary.push_back("residual: " + cert.residual->to_string());
    }
  }
  return r;
}

Report cmd_residue(const std::string& text, const Options& opt) {
  Report r = start("residue", text);
  json j = parse_json(text);
  if (j.is_object() && j.value("witness", false)) {
    if (!j.contains("m") || !j.contains("a") || !j["m"].is_number_integer() || !j["a"].is_number_integer())
      throw InvalidInput("witness requests need integer fields 'm' and 'a'");
    auto w = residue::residue_witness(j["m"].get<std::int64_t>(), j["a"].get<std::int64_t>(), opt.seed);
    r.result = json{{"function", w.function.to_string()},
                    {"resultant", w.resultant.to_string()},
                    {"samples", w.samples},
                    {"certificate", certificate_to_json(w.certificate)}};
    r.citations.push_back("toric residues of generic forms on a dilated simplex are hypergeometric");
    r.summary.push_back("residue function: " + w.function.to_string());
    r.summary.push_back(std::string("certificate: ") + (w.certificate.certified() ? "certified" : "refuted"));
    return r;
  }
  auto p = residue_problem_from_json(j);
  groebner::StepBudget budget(opt.budget);
  residue::ToricResidue res(p, groebner::MonomialOrder::grevlex(), budget);
  r.result = json{{"problem", residue_problem_to_json(p)},
                  {"socle", res.socle()},
                  {"jacobian_residue", rational_to_json(res.jacobian_residue())},
                  {"calibration", rational_to_json(res.calibration_constant())}};
  if (!p.a.empty()) {
    auto value = res.residue(p.a);
    r.result["residue"] = rational_to_json(value);
    r.summary.push_back("residue: " + exact::to_string(value));
  } else {
    json all = json::array();
    for (const auto& a : residue::interior_exponents(p.r, p.m)) {
      auto value = res.residue(a);
      all.push_back(json{{"a", a}, {"residue", rational_to_json(value)}});
      std::string label;
      for (auto x : a) label += (label.empty() ? "" : ",") + std::to_string(x);
      r.summary.push_back("residue at (" + label + "): " + exact::to_string(value));
    }
    r.result["residues"] = all;
  }
  r.summary.push_back("residue of the toric Jacobian: " + exact::to_string(res.jacobian_residue()) +
                      " (expected " + exact::to_string(res.calibration_constant()) + ")");
  r.citations.push_back("global residue via the normal form of the socle in the quotient by the homogenized forms");
  return r;
}

Report cmd_resultant(const std::string& text, const Options&) {
  Report r = start("resultant", text);
  json j = parse_json(text);
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  if (j.contains("degrees")) {
    const json& deg = j["degrees"];
    if (!deg.is_array() || deg.size() != 2 || !deg[0].is_number_integer() || !deg[1].is_number_integer() ||
        deg[0].get<std::int64_t>() < 1 || deg[1].get<std::int64_t>() < 1 || deg[0].get<std::int64_t>() > 8 ||
        deg[1].get<std::int64_t>() > 8)
      throw InvalidInput("'degrees' must be two integers between 1 and 8");
    const auto p = deg[0].get<std::size_t>(), q = deg[1].get<std::size_t>();
    const std::size_t nvars = p + q + 2;
    std::vector<exact::LaurentPolynomial> f, g;
    for (std::size_t k = 0; k <= p; ++k) f.push_back(exact::LaurentPolynomial::variable(nvars, k));
    for (std::size_t k = 0; k <= q; ++k) g.push_back(exact::LaurentPolynomial::variable(nvars, p + 1 + k));
    auto res = residue::sylvester_resultant(f, g, nvars);
    r.result = json{{"degrees", {p, q}}, {"resultant", res.to_string()}, {"terms", res.size()}};
    r.summary.push_back("resultant: " + res.to_string());
  } else {
    exact::RatVector f, g;
    for (const auto& x : j.at("f")) f.push_back(rational_from_json(x));
    for (const auto& x : j.at("g")) g.push_back(rational_from_json(x));
    auto value = residue::sylvester_resultant(f, g);
    r.result = json{{"resultant", rational_to_json(value)}};
    r.summary.push_back("resultant: " + exact::to_string(value));
  }
  r.citations.push_back("determinant of the Sylvester matrix");
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for rational A-hypergeometric functions"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("GKZ_BUDGET")) {
    try {
      opt.budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: GKZ_BUDGET must be a nonnegative integer\n";
      return InputError;
    }
  }
  app.add_option("-i,--input", opt.input, "input JSON file ('-' for stdin)");
  app.add_flag("--json", opt.json, "print the JSON report");
  app.add_option("--seed", opt.seed, "seed for randomized interpolation");
  app.add_option("--max-subsets", opt.max_subsets, "cap on the Cayley partition search");
  app.add_option("--budget", opt.budget, "Groebner step budget (default: GKZ_BUDGET or 1000000)");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"classify", "classify a configuration"},
                      {"circuits", "list the circuits of a configuration"},
                      {"faces", "face lattice, interior points and volume"},
                      {"cayley", "Cayley structures and essentiality"},
                      {"verify", "certify or refute a rational A-hypergeometric function"},
                      {"residue", "toric residues of a residue problem"},
                      {"resultant", "Sylvester resultant"}};
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->fallthrough();
    if (std::string(s.name) == "verify")
      sub->add_option("-f,--function", opt.function, "expression in x1..xs, or @file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (opt.input.empty()) throw InvalidInput("missing --input");
    const std::string text = read_source(opt.input);
    const auto t0 = Clock::now();
    Report r;
    if (command == "classify") r = cmd_classify(text, opt);
    if (command == "circuits") r = cmd_circuits(text, opt);
    if (command == "faces") r = cmd_faces(text, opt);
    if (command == "cayley") r = cmd_cayley(text, opt);
    if (command == "verify") {
      std::string function = opt.function;
      if (!function.empty() && function.front() == '@') function = read_source(function.substr(1));
      r = cmd_verify(text, function, opt);
    }
    if (command == "residue") r = cmd_residue(text, opt);
    if (command == "resultant") r = cmd_resultant(text, opt);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (opt.json)
      out << r.to_json().dump(2) << "\n";
    else
      print_human(r, out);
    return r.exit_code;
  } catch (const ParseError& e) {
    err << "error: parse error: " << e.what() << "\n";
    return InputError;
  } catch (const InvalidInput& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return InputError;
  } catch (const json::exception& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return InputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exhausted: " << e.what() << "\n";
    return BudgetError;
  } catch (const DegenerateInstance& e) {
    err << "error: " << e.what() << "\n";
    return Degenerate;
  }
}

}  // namespace gkz::cli

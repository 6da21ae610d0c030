#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gkz/cli/json_io.hpp"

namespace gkz::cli {

enum ExitCode : int { Ok = 0, Refuted = 1, InputError = 2, BudgetError = 3, Degenerate = 4 };

struct Options {
  std::string input;
  std::string function;
  bool json = false;
  std::uint64_t seed = 1;
  std::uint64_t max_subsets = std::uint64_t{1} << 16;
  std::uint64_t budget = 1000000;
};

/// Result payload and rule citations of one command, plus the exit code.
struct Report {
  std::string command;
  std::string input_digest;
  json result;
  std::vector<std::string> citations;
  std::vector<std::string> summary;
  double seconds = 0;
  int exit_code = Ok;

  json to_json() const;
};

/// 64-bit FNV-1a of the raw input text, as 16 hex digits.
std::string digest(const std::string& text);

Report cmd_classify(const std::string& text, const Options& opt);
Report cmd_circuits(const std::string& text, const Options& opt);
Report cmd_faces(const std::string& text, const Options& opt);
Report cmd_cayley(const std::string& text, const Options& opt);
/// The function is expression text in x1..xs.
Report cmd_verify(const std::string& text, const std::string& function, const Options& opt);
/// Either a ResidueProblem, or {"witness": true, "m": int, "a": int} for the
/// interpolated residue function on the segment [0, m].
Report cmd_residue(const std::string& text, const Options& opt);
/// {"f": [...], "g": [...]} with rational coefficients by increasing power,
/// or {"degrees": [p, q]} for the generic resultant in x1..x{p+q+2}.
Report cmd_resultant(const std::string& text, const Options& opt);

/// Parses argv, runs one subcommand and writes the report (human text or
/// JSON) to out and diagnostics to err. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gkz::cli

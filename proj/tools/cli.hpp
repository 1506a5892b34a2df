#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "birch/json_io.hpp"

namespace birch::cli {

/// One invocation of the command-line front end.
struct JobSpec {
  std::string command;  ///< parse|polytope|circuit|coercive|nonneg|transform|minimize|certify|solve|threshold
  std::string input;    ///< polynomial text; systems use one polynomial per line
  std::vector<std::string> variables;
  std::uint64_t seed = 0;
  int starts = 64;
  int budget = 10'000;
  double tol = 1e-4;
  std::string mode = "sup";              ///< threshold
  std::optional<std::vector<std::int64_t>> gamma;   ///< threshold
  std::optional<std::vector<std::int64_t>> vertex;  ///< transform
  bool validate = true;                  ///< certify
};

struct RunResult {
  int exit_code = 0;  ///< 0 definitive, 2 unknown, 1 usage or parse error
  Json document;
  std::vector<std::string> warnings;
};

/// Lines of a system file: '#' starts a comment, blank lines are skipped,
/// ';' also separates polynomials.
std::vector<std::string> split_polynomials(const std::string& text);

/// Throws std::invalid_argument (usage) or ParseError (input).
void check_spec(const JobSpec& spec);

/// Never throws; errors become exit code 1 with {"error": ...}.
RunResult run(const JobSpec& spec);

}  // namespace birch::cli

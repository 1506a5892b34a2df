#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<std::int64_t> parse_point(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_csv(s)) out.push_back(std::stoll(item));
  return out;
}

std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  if (arg == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  return arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"birchcert: certify positive zeros of Birch-type polynomial systems"};
  app.require_subcommand(1);

  birch::cli::JobSpec spec;
  std::string input, vars = "x,y", gamma, vertex, output;
  bool pretty = false;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"parse", "canonical form of a polynomial"},
      {"polytope", "Newton polytope: vertices, facets, faces avoiding the origin"},
      {"circuit", "recognize a circuit polynomial and compare with its circuit number"},
      {"coercive", "necessary and sufficient coercivity checks"},
      {"nonneg", "decide nonnegativity on the positive orthant"},
      {"transform", "normalize at a simple vertex by a monomial transformation"},
      {"minimize", "check hypotheses and locate a minimizer on the closed orthant"},
      {"certify", "certify a positive zero of a Birch-type system"},
      {"solve", "numerically find positive zeros of a square system"},
      {"threshold", "estimate the coefficient threshold for orthant nonnegativity"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "file, '-' for stdin, or inline polynomial text")->required();
    sub->add_option("--vars", vars, "comma-separated variable names")->capture_default_str();
    sub->add_option("--seed", spec.seed, "random seed")->capture_default_str();
    sub->add_option("--starts", spec.starts, "numeric multistart count")->capture_default_str();
    sub->add_option("--budget", spec.budget, "iteration budget for minimization")->capture_default_str();
    sub->add_option("--tol", spec.tol, "threshold bracket width")->capture_default_str();
    sub->add_option("--mode", spec.mode, "threshold mode: inf or sup")->capture_default_str();
    sub->add_option("--gamma", gamma, "threshold gamma exponent, e.g. 1,2");
    sub->add_option("--vertex", vertex, "transform vertex, e.g. 4,0");
    sub->add_flag("--no-validate{false}", spec.validate, "skip numeric validation in certify");
    sub->add_flag("--json", "compact JSON output (default)");
    sub->add_flag("--pretty", pretty, "indented JSON output");
    sub->add_option("-o,--output", output, "write JSON to a file instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  spec.command = app.get_subcommands().front()->get_name();
  spec.variables = split_csv(vars);
  try {
    spec.input = read_input(input);
    if (!gamma.empty()) spec.gamma = parse_point(gamma);
    if (!vertex.empty()) spec.vertex = parse_point(vertex);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const auto result = birch::cli::run(spec);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  if (result.exit_code == 1 && result.document.contains("error"))
    std::cerr << "error: " << result.document["error"].get<std::string>() << "\n";

  const std::string text = result.document.dump(pretty ? 2 : -1) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return 1;
    }
    out << text;
  }
  return result.exit_code;
}

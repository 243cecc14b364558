#include "pga2d/multivector.hpp"
#include "pga2d/script/evaluator.hpp"
#include "pga2d/script/program.hpp"
#include "pga2d/script/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kParseFailure = 1;
constexpr int kEvaluationFailure = 2;

int run(const std::string& path, const std::string& svg_path, double tol) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "pga2d: cannot read '" << path << "'\n";
    return kParseFailure;
  }
  std::ostringstream source;
  source << in.rdbuf();

  pga2d::script::Program program;
  try {
    program = pga2d::script::parse(source.str());
  } catch (const pga2d::script::ParseError& e) {
    std::cerr << path << ": parse error: " << e.what() << "\n";
    return kParseFailure;
  }

  try {
    const pga2d::script::Environment env = pga2d::script::evaluate(program, std::cout, tol);
    if (!svg_path.empty()) {
      pga2d::script::write_svg(env, svg_path, tol);
    }
  } catch (const pga2d::Error& e) {
    std::cout.flush();
    std::cerr << path << ": error: " << e.what() << "\n";
    return kEvaluationFailure;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane geometry with projective geometric algebra"};
  app.require_subcommand(1);

  std::string script;
  std::string svg_path;
  double tol = pga2d::kDefaultTolerance;
  CLI::App* run_cmd = app.add_subcommand("run", "Evaluate a construction script");
  run_cmd->add_option("script", script, "Script file")->required();
  run_cmd->add_option("--svg", svg_path, "Render the final environment to this SVG file");
  run_cmd->add_option("--tol", tol, "Zero tolerance relative to the largest coefficient")
      ->check(CLI::PositiveNumber);

  CLI::App* tables_cmd = app.add_subcommand("tables", "Print the geometric product and dual tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kParseFailure;
  }

  if (*tables_cmd) {
    std::cout << pga2d::describe_tables();
    return 0;
  }
  return run(script, svg_path, tol);
}

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace chebext::cli;

  CLI::App app{"Extremal problems for sums of squared polynomials on [-b, b]"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* sub_solve = app.add_subcommand("solve", "Solve one instance and print a JSON record");
  sub_solve->add_option("--kind", solve.kind, "first | second")->capture_default_str();
  sub_solve->add_option("--indices", solve.indices, "Comma-separated degrees, e.g. 1,2,3")->required();
  sub_solve->add_option("--b", solve.b, "Interval half-width in (0, 10]")->required();
  sub_solve->add_option("--indent", solve.indent, "JSON indent, -1 for one line")->capture_default_str();

  SweepArgs sweep;
  auto* sub_sweep = app.add_subcommand("sweep", "Tabulate phase and optimum over a b-grid as CSV");
  sub_sweep->add_option("--kind", sweep.kind, "first | second")->capture_default_str();
  sub_sweep->add_option("--indices", sweep.indices, "Comma-separated degrees")->required();
  sub_sweep->add_option("--b-min", sweep.b_min, "First grid point")->capture_default_str();
  sub_sweep->add_option("--b-max", sweep.b_max, "Last grid point")->capture_default_str();
  sub_sweep->add_option("--steps", sweep.steps, "Number of grid points")->capture_default_str();

  OracleArgs oracle;
  auto* sub_oracle = app.add_subcommand("oracle", "Compare the solver with a brute-force search");
  sub_oracle->add_option("--kind", oracle.kind, "first | second")->capture_default_str();
  sub_oracle->add_option("--indices", oracle.indices, "Comma-separated degrees")->required();
  sub_oracle->add_option("--b", oracle.b, "Interval half-width in (0, 10]")->required();
  sub_oracle->add_option("--budget", oracle.budget, "Objective evaluations")->capture_default_str();
  sub_oracle->add_option("--seed", oracle.seed, "Restart seed")->capture_default_str();
  sub_oracle->add_option("--restarts", oracle.restarts, "Independent restarts")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  if (*sub_solve) return cmd_solve(solve, std::cout, std::cerr);
  if (*sub_sweep) return cmd_sweep(sweep, std::cout, std::cerr);
  return cmd_oracle(oracle, std::cout, std::cerr);
}

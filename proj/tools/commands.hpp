#ifndef CHEBEXT_TOOLS_COMMANDS_HPP
#define CHEBEXT_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace chebext::cli {

/// Process exit codes.
enum ExitCode : int { kPass = 0, kInvalidInput = 1, kCheckFailed = 2 };

struct SolveArgs {
  std::string kind = "first";
  std::string indices;
  double b = 1.0;
  int indent = 2;
};

struct SweepArgs {
  std::string kind = "first";
  std::string indices;
  double b_min = 0.5;
  double b_max = 3.0;
  std::size_t steps = 101;
};

struct OracleArgs {
  std::string kind = "first";
  std::string indices;
  double b = 1.0;
  std::size_t budget = 200000;
  std::uint64_t seed = 0;
  std::size_t restarts = 50;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err);

}  // namespace chebext::cli

#endif  // CHEBEXT_TOOLS_COMMANDS_HPP

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <vector>

#include "chebext/chebext.hpp"

namespace chebext::cli {

namespace {

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
      throw InvalidInput("malformed index list '" + text + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

ProblemSpec make_spec(const std::string& kind, const std::string& indices, double b) {
  return ProblemSpec(parse_kind(kind), parse_indices(indices), b);
}

void require_closed_form(const ProblemSpec& spec) {
  if (spec.kind() == ProblemKind::second && !spec.is_full() && !spec.is_pair())
    throw InvalidInput("second kind needs indices 0..n or n-1,n");
}

// Phase column of the sweep: the closed-form k when known, otherwise the
// lowest index carrying alpha mass.
int phase_of(const ExtremalSolution& sol) {
  if (sol.phase_index) return *sol.phase_index;
  for (const auto& [j, a] : sol.alphas)
    if (a > 0.0) return j;
  return sol.polys.rbegin()->first;
}

std::string join_indices(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const ProblemSpec spec = make_spec(args.kind, args.indices, args.b);
    require_closed_form(spec);
    ExtremalSolution sol = solve_problem(spec);
    const VerificationReport rep = verify_solution(sol, spec);
    out << to_json(SolutionRecord{kRecordVersion, spec, std::move(sol), rep}, args.indent) << '\n';
    if (!rep.pass()) {
      err << "verification failed\n";
      return kCheckFailed;
    }
    return kPass;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!(args.b_min < args.b_max)) throw InvalidInput("--b-min must be below --b-max");
    if (args.steps < 2) throw InvalidInput("--steps must be at least 2");
    // Validates kind, indices and both ends of the grid up front.
    const ProblemSpec lo = make_spec(args.kind, args.indices, args.b_min);
    require_closed_form(lo);
    (void)make_spec(args.kind, args.indices, args.b_max);

    out << "b,k,objective,active_set\n";
    const double h = (args.b_max - args.b_min) / static_cast<double>(args.steps - 1);
    for (std::size_t i = 0; i < args.steps; ++i) {
      const double b = i + 1 == args.steps ? args.b_max : args.b_min + h * static_cast<double>(i);
      const ProblemSpec spec(lo.kind(), lo.indices(), b);
      const ExtremalSolution sol = solve_problem(spec);
      out << format_real(b) << ',' << phase_of(sol) << ',' << format_real(sol.objective) << ','
          << join_indices(sol.active_set) << '\n';
    }
    return kPass;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const ProblemSpec spec = make_spec(args.kind, args.indices, args.b);
    require_closed_form(spec);
    const double objective = solve_problem(spec).objective;
    BruteForceOptions opt;
    opt.restarts = args.restarts;
    const OracleResult res = brute_force_max(spec, args.budget, args.seed, opt);

    const double gap = std::abs(objective - res.best_value);
    const double tol = 1e-3 * std::max(1.0, objective);
    const bool pass = gap <= tol;

    std::string indices;
    for (std::size_t i = 0; i < spec.indices().size(); ++i)
      indices += (i ? ", " : "") + std::to_string(spec.indices()[i]);
    out << "{\n"
        << "  \"spec\": {\"kind\": \"" << to_string(spec.kind()) << "\", \"indices\": [" << indices
        << "], \"b\": " << format_real(spec.b()) << "},\n"
        << "  \"solver_objective\": " << format_real(objective) << ",\n"
        << "  \"oracle_value\": " << format_real(res.best_value) << ",\n"
        << "  \"gap\": " << format_real(gap) << ",\n"
        << "  \"tolerance\": " << format_real(tol) << ",\n"
        << "  \"budget\": " << args.budget << ",\n"
        << "  \"evaluations\": " << res.evaluations << ",\n"
        << "  \"seed\": " << res.seed << ",\n"
        << "  \"pass\": " << (pass ? "true" : "false") << "\n"
        << "}\n";
    if (!pass) {
      err << "oracle gap " << format_real(gap) << " exceeds " << format_real(tol) << '\n';
      return kCheckFailed;
    }
    return kPass;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace chebext::cli

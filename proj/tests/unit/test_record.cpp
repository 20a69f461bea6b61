#include <chebext/dual_solver.hpp>
#include <chebext/errors.hpp>
#include <chebext/record.hpp>
#include <chebext/verify.hpp>

#include <cmath>

#include "doctest.h"

using chebext::ProblemKind;
using chebext::ProblemSpec;

namespace {

chebext::SolutionRecord make(ProblemSpec spec) {
  auto sol = chebext::solve_problem(spec);
  auto rep = chebext::verify_solution(sol, spec);
  return {chebext::kRecordVersion, std::move(spec), std::move(sol), rep};
}

}  // namespace

TEST_CASE("format_real round-trips doubles") {
  for (double v : {0.1, 1.0 / 3.0, 16.0, 1e-300, -2.5e17, 0.375})
    CHECK(std::stod(chebext::format_real(v)) == v);
  CHECK(chebext::format_real(0.375) == "0.375");
}

TEST_CASE("records round-trip exactly") {
  const std::vector<ProblemSpec> specs{
      ProblemSpec(ProblemKind::first, {1, 2, 3}, 1.6), ProblemSpec(ProblemKind::first, {2, 4}, 1.5),
      ProblemSpec(ProblemKind::first, {3}, 1.0), ProblemSpec(ProblemKind::second, {0, 1, 2}, 1.7),
      ProblemSpec(ProblemKind::second, {2, 3}, 2.5)};
  for (const auto& spec : specs) {
    const auto rec = make(spec);
    for (int indent : {2, -1}) {
      const std::string text = chebext::to_json(rec, indent);
      const auto back = chebext::parse_solution_record(text);
      CHECK(back.version == rec.version);
      CHECK(back.spec == rec.spec);
      CHECK(back.solution.polys == rec.solution.polys);
      CHECK(back.solution.alphas == rec.solution.alphas);
      CHECK(back.solution.objective == rec.solution.objective);
      CHECK(back.solution.phase_index == rec.solution.phase_index);
      CHECK(back.solution.dual_moments == rec.solution.dual_moments);
      CHECK(back.solution.active_set == rec.solution.active_set);
      CHECK(back.verification.duality_residual == rec.verification.duality_residual);
      CHECK(back.verification.constraint_sup.argmax == rec.verification.constraint_sup.argmax);
      CHECK(back.verification.pass() == rec.verification.pass());
      CHECK(chebext::to_json(back, indent) == text);
    }
  }
}

TEST_CASE("re-verifying a parsed record reproduces its residuals") {
  for (double b : {0.9, 1.5, 2.0, 2.7}) {
    const auto rec = make(ProblemSpec(ProblemKind::first, {1, 2, 4}, b));
    const auto back = chebext::parse_solution_record(chebext::to_json(rec));
    const auto again = chebext::verify_solution(back.solution, back.spec);
    const auto& v = rec.verification;
    CHECK(std::abs(again.constraint_sup.sup - v.constraint_sup.sup) <= 1e-12);
    CHECK(std::abs(again.equimax_spread - v.equimax_spread) <= 1e-12);
    CHECK(std::abs(again.support_attainment - v.support_attainment) <= 1e-12);
    CHECK(std::abs(again.duality_residual - v.duality_residual) <= 1e-12);
  }
}

TEST_CASE("malformed documents are rejected") {
  const std::string good = chebext::to_json(make(ProblemSpec(ProblemKind::first, {1, 2}, 2.0)));
  CHECK_NOTHROW((void)chebext::parse_solution_record(good));
  CHECK_THROWS_AS((void)chebext::parse_solution_record("{"), chebext::InvalidInput);
  CHECK_THROWS_AS((void)chebext::parse_solution_record("[]"), chebext::InvalidInput);
  std::string wrong_version = good;
  wrong_version.replace(wrong_version.find("\"version\": 1"), 12, "\"version\": 9");
  CHECK_THROWS_AS((void)chebext::parse_solution_record(wrong_version), chebext::InvalidInput);
  std::string no_spec = good;
  no_spec.replace(no_spec.find("\"spec\""), 6, "\"spek\"");
  CHECK_THROWS_AS((void)chebext::parse_solution_record(no_spec), chebext::InvalidInput);
}

#ifndef CHEBEXT_RECORD_HPP
#define CHEBEXT_RECORD_HPP

#include <string>
#include <string_view>

#include "chebext/problem.hpp"

namespace chebext {

inline constexpr int kRecordVersion = 1;

/// Serializable image of a solved instance.
///
///   {version, spec:{kind, indices, b},
///    solution:{phase_index?, dual_moments, alphas, polys:[{index, coeffs}], objective, active_set},
///    verification:{constraint_sup, argmax, equimax_spread, support_attainment,
///                  duality_residual, pass, ...}}
///
/// Reals are written with 17 significant digits, so doubles survive a round trip.
struct SolutionRecord {
  int version = kRecordVersion;
  ProblemSpec spec;
  ExtremalSolution solution;
  VerificationReport verification;
};

/// "%.17g"
[[nodiscard]] std::string format_real(double v);

[[nodiscard]] std::string to_json(const SolutionRecord& rec, int indent = 2);

/// Throws InvalidInput on malformed documents or an unknown version.
[[nodiscard]] SolutionRecord parse_solution_record(std::string_view text);

}  // namespace chebext

#endif  // CHEBEXT_RECORD_HPP

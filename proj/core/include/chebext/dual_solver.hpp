#ifndef CHEBEXT_DUAL_SOLVER_HPP
#define CHEBEXT_DUAL_SOLVER_HPP

#include <vector>

#include "chebext/canonical.hpp"
#include "chebext/problem.hpp"

namespace chebext {

/// Relative tolerance on k_j when deciding membership of the active set.
inline constexpr double kActiveSetTol = 1e-9;

/// Canonical moments of the optimal dual measure for a first-kind problem.
///
/// Odd moments are 1/2, p_{2n} = 1, and the even moments are filled from the
/// top down: for j = 1..n-1,
///
///   p_{2(n-j)} = max{ z_{n-j} [1 - b^{-2j} prod_{i=n-j+1}^{n-1} (q_{2i} p_{2i})^{-1}], 1/2 }
///
/// with z_m = 1 iff m is in I. Throws InvalidInput for a second-kind spec.
[[nodiscard]] CanonicalMomentSeq dual_moments(const ProblemSpec& spec);

/// Indices j in I with k_j <= (1 + 1e-9) min_{i in I} k_i. Contains n for
/// dual_moments output.
[[nodiscard]] std::vector<int> active_set(const CanonicalMomentSeq& cm, const ProblemSpec& spec);

/// alpha_j = prod_{i<j} (q_{2i}/p_{2i}) * (1 - q_{2j}/p_{2j}) for j = 1..n,
/// returned at positions 0..n-1. Telescopes to 1 when p_{2n} = 1.
[[nodiscard]] std::vector<double> alpha_weights(const CanonicalMomentSeq& cm, int n);

/// Solves the first-kind problem for an arbitrary index set through the dual
/// measure: P_j* = sqrt(alpha_j / k_j) P_j(x, xi*).
[[nodiscard]] ExtremalSolution solve_first_kind(const ProblemSpec& spec);

/// solve_first_kind for the first kind; the closed forms for second-kind
/// sets {0..n} and {n-1, n}. Other second-kind sets throw InvalidInput.
[[nodiscard]] ExtremalSolution solve_problem(const ProblemSpec& spec);

}  // namespace chebext

#endif  // CHEBEXT_DUAL_SOLVER_HPP

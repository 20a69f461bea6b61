#ifndef CHEBEXT_VERIFY_HPP
#define CHEBEXT_VERIFY_HPP

#include "chebext/problem.hpp"

namespace chebext {

/// Pass thresholds of verify_solution.
struct VerifyTolerances {
  double feasibility = 1e-8;
  double equimax = 1e-9;
  double attainment = 1e-8;
  double duality = 1e-8;
};

/// Checks a candidate solution against its problem.
///
/// (i) sup of the (weighted) constraint, (ii) spread of k_j over the active
/// set, (iii) the constraint equals 1 on the support of the dual measure,
/// (iv) |objective * k_n - 1|. First-kind specs use the solution's dual
/// moments, or dual_moments(spec) when absent. Second-kind specs have no dual
/// measure; see VerificationReport::dual_available. Throws InvalidInput only
/// for second-kind index sets without a closed form ({0..n} or {n-1, n}).
[[nodiscard]] VerificationReport verify_solution(const ExtremalSolution& sol,
                                                 const ProblemSpec& spec,
                                                 const VerifyTolerances& tol = {});

}  // namespace chebext

#endif  // CHEBEXT_VERIFY_HPP

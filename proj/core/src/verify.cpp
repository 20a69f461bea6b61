#include "chebext/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chebext/closed_form.hpp"
#include "chebext/dual_solver.hpp"
#include "chebext/errors.hpp"

namespace chebext {

namespace {

std::vector<Polynomial> family(const ExtremalSolution& sol) {
  std::vector<Polynomial> out;
  out.reserve(sol.polys.size());
  for (const auto& [j, p] : sol.polys) out.push_back(p);
  return out;
}

double second_kind_reference(const ProblemSpec& spec) {
  const int n = spec.n();
  if (spec.is_full())
    return second_full_value(n, spec.b(), threshold_index(n, spec.b(), ProblemKind::second));
  if (spec.is_pair()) return pair_second_value(n, spec.b());
  throw InvalidInput("verify_solution: no closed form for this second-kind index set");
}

}  // namespace

VerificationReport verify_solution(const ExtremalSolution& sol, const ProblemSpec& spec,
                                   const VerifyTolerances& tol) {
  const std::vector<Polynomial> polys = family(sol);
  const Weight weight = spec.kind() == ProblemKind::second ? Weight::second_kind : Weight::none;

  VerificationReport rep;
  rep.constraint_sup = sup_sum_squares(polys, spec.b(), weight);
  rep.objective = objective_of(sol.polys);
  rep.feasible = rep.constraint_sup.sup <= 1.0 + tol.feasibility;

  if (spec.kind() == ProblemKind::second) {
    const double reference = second_kind_reference(spec);
    rep.dual_available = false;
    rep.equimax_spread = 0.0;
    rep.support_attainment = std::abs(rep.constraint_sup.sup - 1.0);
    rep.duality_residual = std::abs(rep.objective / reference - 1.0);
  } else {
    rep.dual_available = true;
    const CanonicalMomentSeq cm = sol.dual_moments ? *sol.dual_moments : dual_moments(spec);
    const std::vector<double> k = l2_norms(cm, spec.n());
    const std::vector<int> active = sol.active_set.empty() ? active_set(cm, spec) : sol.active_set;

    double kmin = std::numeric_limits<double>::infinity();
    double kmax = 0.0;
    for (int j : active) {
      const double kj = k.at(static_cast<std::size_t>(j - 1));
      kmin = std::min(kmin, kj);
      kmax = std::max(kmax, kj);
    }
    rep.equimax_spread = active.empty() ? 0.0 : (kmax - kmin) / kmin;

    const DiscreteMeasure measure = support_measure(cm);
    double worst = 0.0;
    for (double x : measure.points)
      worst = std::max(worst, std::abs(constraint_value(polys, spec.b(), weight, x) - 1.0));
    rep.support_attainment = worst;
    rep.duality_residual = std::abs(rep.objective * k.back() - 1.0);
  }

  rep.equimax_ok = rep.equimax_spread <= tol.equimax;
  rep.attainment_ok = rep.support_attainment <= tol.attainment;
  rep.duality_ok = rep.duality_residual <= tol.duality;
  return rep;
}

}  // namespace chebext

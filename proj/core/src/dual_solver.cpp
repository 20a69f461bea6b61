#include "chebext/dual_solver.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "chebext/closed_form.hpp"
#include "chebext/errors.hpp"

namespace chebext {

CanonicalMomentSeq dual_moments(const ProblemSpec& spec) {
  if (spec.kind() != ProblemKind::first)
    throw InvalidInput("dual_moments: only defined for the first kind");
  const int n = spec.n();
  const double b = spec.b();
  std::vector<double> p(static_cast<std::size_t>(2 * n), 0.5);
  p.back() = 1.0;
  auto even = [&](int i) -> double& { return p[static_cast<std::size_t>(2 * i - 1)]; };

  // prod_{i=n-j+1}^{n-1} q_{2i} p_{2i}, grown as j increases.
  double prod = 1.0;
  for (int j = 1; j <= n - 1; ++j) {
    if (j >= 2) {
      const double pe = even(n - j + 1);
      const double qp = (1.0 - pe) * pe;
      assert(qp > 0.0);
      prod *= qp;
    }
    const double z = spec.contains(n - j) ? 1.0 : 0.0;
    even(n - j) = std::max(z * (1.0 - std::pow(b, -2.0 * j) / prod), 0.5);
  }
  return CanonicalMomentSeq(b, std::move(p));
}

std::vector<int> active_set(const CanonicalMomentSeq& cm, const ProblemSpec& spec) {
  const std::vector<double> k = l2_norms(cm, spec.n());
  double kmin = k[static_cast<std::size_t>(spec.indices().front() - 1)];
  for (int j : spec.indices()) kmin = std::min(kmin, k[static_cast<std::size_t>(j - 1)]);
  std::vector<int> out;
  for (int j : spec.indices())
    if (k[static_cast<std::size_t>(j - 1)] <= (1.0 + kActiveSetTol) * kmin) out.push_back(j);
  return out;
}

std::vector<double> alpha_weights(const CanonicalMomentSeq& cm, int n) {
  std::vector<double> alpha(static_cast<std::size_t>(n));
  double carry = 1.0;
  for (int j = 1; j <= n; ++j) {
    const double pe = cm.at(static_cast<std::size_t>(2 * j));
    const double ratio = (1.0 - pe) / pe;
    alpha[static_cast<std::size_t>(j - 1)] = carry * (1.0 - ratio);
    carry *= ratio;
  }
  return alpha;
}

ExtremalSolution solve_first_kind(const ProblemSpec& spec) {
  if (spec.kind() != ProblemKind::first)
    throw InvalidInput("solve_first_kind: spec is not of the first kind");
  const int n = spec.n();
  CanonicalMomentSeq cm = dual_moments(spec);
  const auto monic = monic_orthopolys(cm, n);
  const auto k = l2_norms(cm, n);
  const auto alpha = alpha_weights(cm, n);

  ExtremalSolution sol;
  for (int j : spec.indices()) {
    const auto idx = static_cast<std::size_t>(j - 1);
    sol.alphas[j] = alpha[idx];
    sol.polys[j] = alpha[idx] > 0.0
                       ? (std::sqrt(alpha[idx] / k[idx]) * monic[static_cast<std::size_t>(j)])
                             .with_positive_leading()
                       : Polynomial{};
  }
  sol.objective = objective_of(sol.polys);
  sol.active_set = active_set(cm, spec);
  if (spec.is_full()) sol.phase_index = threshold_index(n, spec.b(), ProblemKind::first);
  sol.dual_moments = std::move(cm);
  return sol;
}

ExtremalSolution solve_problem(const ProblemSpec& spec) {
  if (spec.kind() == ProblemKind::first) return solve_first_kind(spec);
  if (spec.is_full()) return closed_form_second_full(spec.n(), spec.b());
  if (spec.is_pair()) return closed_form_pair_second(spec.n(), spec.b());
  throw InvalidInput("second kind is only solved for I = {0..n} or I = {n-1, n}");
}

}  // namespace chebext

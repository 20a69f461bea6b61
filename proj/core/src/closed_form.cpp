#include "chebext/closed_form.hpp"

#include <cmath>
#include <string>

#include "chebext/dual_solver.hpp"
#include "chebext/errors.hpp"

namespace chebext {

namespace {

double u_half(int m, double b) { return cheb_second_value(m, 0.5 * b); }

// T_m(x / s) and U_m(x / s) as polynomials in x. U_{-1} is the zero polynomial.
Polynomial t_scaled(int m, double s) { return cheb_first(m).rescaled(1.0 / s); }
Polynomial u_scaled(int m, double s) {
  if (m == -1) return {};
  return cheb_second(m).rescaled(1.0 / s);
}

void check_args(int n, double b, int min_n, const char* who) {
  if (n < min_n || n > kMaxDegree)
    throw InvalidInput(std::string(who) + ": n must lie in [" + std::to_string(min_n) + ", 30]");
  if (!(b > 0.0 && b <= 10.0)) throw InvalidInput(std::string(who) + ": b must lie in (0, 10]");
}

// alpha_j = m_j^2 / objective, i.e. alpha_j = m_j^2 k_j on the active set.
void alphas_from_leading(ExtremalSolution& sol) {
  for (const auto& [j, p] : sol.polys) {
    const double m = p.coeff(static_cast<std::size_t>(j));
    sol.alphas[j] = sol.objective > 0.0 ? m * m / sol.objective : 0.0;
  }
}

}  // namespace

int threshold_index(int n, double b, ProblemKind kind) {
  const int top = kind == ProblemKind::first ? n : n + 1;
  const int shift = kind == ProblemKind::first ? 1 : 3;
  int k = top;
  for (int i = top; i >= 1; --i) {
    if (!(u_half(2 * n - 2 * i + shift, b) > kThresholdEps)) break;
    k = i;
  }
  return k;
}

double first_full_value(int n, double b, int k) {
  return std::pow(2.0, 2 * k - 2) / std::pow(b, 2 * k - 1) * u_half(n - k, b) /
         u_half(n - k + 1, b);
}

double second_full_value(int n, double b, int k) {
  return std::pow(2.0, 2 * k - 2) / std::pow(b, 2 * k - 1) * u_half(n - k + 1, b) /
         u_half(n - k + 2, b);
}

double pair_first_value(int n, double b) {
  if (b * b <= 2.0) return std::pow(2.0, 2 * n - 2) * std::pow(b, -2 * n);
  return std::pow(2.0, 2 * n - 4) * std::pow(b, -(2 * n - 4)) / (b * b - 1.0);
}

double pair_second_value(int n, double b) {
  if (b * b <= 2.0) return std::pow(2.0, 2 * n) * std::pow(b, -2 * n - 2);
  return std::pow(2.0 / b, 2 * (n - 1)) / (b * b - 1.0);
}

ExtremalSolution closed_form_first_full(int n, double b) {
  check_args(n, b, 1, "closed_form_first_full");
  const int k = threshold_index(n, b, ProblemKind::first);
  const double u_lo = u_half(n - k, b);
  const double u_hi = u_half(n - k + 1, b);
  const double ratio = u_hi / u_lo;

  ExtremalSolution sol;
  sol.phase_index = k;
  for (int l = 1; l <= n; ++l) {
    if (l <= k - 1) {
      sol.polys[l] = Polynomial{};
      sol.alphas[l] = 0.0;
      continue;
    }
    const double beta = std::sqrt(b * u_half(2 * n - 2 * l + 1, b)) / u_hi;
    const Polynomial bracket = t_scaled(k, b) * u_scaled(l - k, 2.0) -
                               ratio * (t_scaled(k - 1, b) * u_scaled(l - 1 - k, 2.0));
    sol.polys[l] = (beta * bracket).with_positive_leading();
    sol.alphas[l] = u_half(2 * n - 2 * l + 1, b) / (u_lo * u_hi);
  }
  sol.objective = objective_of(sol.polys);

  // p_{2j} = U_{n-j+1}(b/2) / (b U_{n-j}(b/2)) for j >= k, 1/2 below, p_{2n} = 1.
  std::vector<double> p(static_cast<std::size_t>(2 * n), 0.5);
  for (int j = k; j < n; ++j)
    p[static_cast<std::size_t>(2 * j - 1)] = u_half(n - j + 1, b) / (b * u_half(n - j, b));
  p.back() = 1.0;
  CanonicalMomentSeq cm(b, std::move(p));

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) all[static_cast<std::size_t>(j - 1)] = j;
  sol.active_set = active_set(cm, ProblemSpec(ProblemKind::first, all, b));
  sol.dual_moments = std::move(cm);
  return sol;
}

ExtremalSolution closed_form_pair_first(int n, double b) {
  check_args(n, b, 2, "closed_form_pair_first");
  const ProblemSpec spec(ProblemKind::first, {n - 1, n}, b);
  const double b2 = b * b;

  ExtremalSolution sol;
  if (b2 <= 2.0) {
    sol.phase_index = n;
    sol.polys[n - 1] = Polynomial{};
    sol.polys[n] = t_scaled(n, b).with_positive_leading();
  } else {
    sol.phase_index = n - 1;
    sol.polys[n - 1] =
        (b * std::sqrt(b2 - 2.0) / (b2 - 1.0) * t_scaled(n - 1, b)).with_positive_leading();
    sol.polys[n] = ((b2 * t_scaled(n, b) - (b2 - 2.0) * t_scaled(n - 2, b)) * (0.5 / (b2 - 1.0)))
                       .with_positive_leading();
  }
  sol.objective = objective_of(sol.polys);
  alphas_from_leading(sol);
  CanonicalMomentSeq cm = dual_moments(spec);
  sol.active_set = active_set(cm, spec);
  sol.dual_moments = std::move(cm);
  return sol;
}

ExtremalSolution closed_form_second_full(int n, double b) {
  check_args(n, b, 0, "closed_form_second_full");
  const int k = threshold_index(n, b, ProblemKind::second);
  const double u_lo = u_half(n - k + 1, b);
  const double u_hi = u_half(n - k + 2, b);
  const double ratio = u_hi / u_lo;

  ExtremalSolution sol;
  sol.phase_index = k;
  for (int l = 0; l <= n; ++l) {
    if (l <= k - 2) {
      sol.polys[l] = Polynomial{};
      continue;
    }
    const double beta = std::sqrt(u_half(2 * n - 2 * l + 1, b)) / (std::sqrt(b) * u_hi);
    const Polynomial lead_part = u_scaled(k - 1, b) * u_scaled(l - k + 1, 2.0);
    const Polynomial tail = u_scaled(k - 2, b) * u_scaled(l - k, 2.0);
    sol.polys[l] = (beta * (lead_part - ratio * tail)).with_positive_leading();
    sol.active_set.push_back(l);
  }
  sol.objective = objective_of(sol.polys);
  alphas_from_leading(sol);
  return sol;
}

ExtremalSolution closed_form_pair_second(int n, double b) {
  check_args(n, b, 1, "closed_form_pair_second");
  const double b2 = b * b;

  ExtremalSolution sol;
  if (b2 <= 2.0) {
    sol.phase_index = n + 1;
    sol.polys[n - 1] = Polynomial{};
    sol.polys[n] = ((1.0 / b) * u_scaled(n, b)).with_positive_leading();
    sol.active_set = {n};
  } else {
    sol.phase_index = n;
    sol.polys[n - 1] =
        (std::sqrt(b2 - 2.0) / (b2 - 1.0) * u_scaled(n - 1, b)).with_positive_leading();
    const Polynomial lower = n >= 2 ? u_scaled(n - 2, b) : Polynomial{};
    sol.polys[n] = ((u_scaled(n, b) - ((b2 - 2.0) / b2) * lower) * (b / (2.0 * (b2 - 1.0))))
                       .with_positive_leading();
    sol.active_set = {n - 1, n};
  }
  sol.objective = objective_of(sol.polys);
  alphas_from_leading(sol);
  return sol;
}

}  // namespace chebext

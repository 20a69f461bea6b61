#include "chebext/supnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "chebext/errors.hpp"

namespace chebext {

namespace {

constexpr double kRefineTol = 1e-12;
constexpr int kNodesPerDegree = 64;

// Golden-section search for a maximum of f on [lo, hi]; returns (x, f(x)).
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > kRefineTol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
    // Interval stopped shrinking at machine precision.
    if (x1 >= x2) break;
  }
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace

double constraint_value(std::span<const Polynomial> polys, double b, Weight w, double x) noexcept {
  double sum = 0.0;
  for (const auto& p : polys) {
    const double v = p(x);
    sum += v * v;
  }
  return w == Weight::second_kind ? (b * b - x * x) * sum : sum;
}

SupNormEvaluator::SupNormEvaluator(double b, std::size_t max_degree, Weight w)
    : b_(b), weight_(w) {
  if (!(b > 0.0 && b <= 10.0)) throw InvalidInput("sup_sum_squares: b must lie in (0, 10]");
  if (max_degree > static_cast<std::size_t>(kMaxDegree))
    throw InvalidInput("sup_sum_squares: squared-sum degree exceeds 60");

  const std::size_t total_deg = 2 * max_degree + (w == Weight::second_kind ? 2 : 0);
  const std::size_t count = kNodesPerDegree * (total_deg + 1);
  // Ascending Chebyshev-Lobatto nodes, endpoints included.
  nodes_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(count - 1 - i) /
                         static_cast<double>(count - 1);
    nodes_[i] = b * std::cos(theta);
  }
  nodes_.front() = -b;
  nodes_.back() = b;
}

SupNormReport SupNormEvaluator::operator()(std::span<const Polynomial> polys) const {
  if (polys.empty()) throw InvalidInput("sup_sum_squares: empty polynomial list");
  auto f = [&](double x) { return constraint_value(polys, b_, weight_, x); };

  const std::size_t count = nodes_.size();
  std::vector<double> fs(count);
  for (std::size_t i = 0; i < count; ++i) fs[i] = f(nodes_[i]);

  SupNormReport report;
  report.attained_tol = kRefineTol;
  const auto best = std::max_element(fs.begin(), fs.end());
  report.sup = *best;
  report.argmax = nodes_[static_cast<std::size_t>(best - fs.begin())];

  for (std::size_t i = 0; i < count; ++i) {
    const bool left_ok = i == 0 || fs[i] >= fs[i - 1];
    const bool right_ok = i + 1 == count || fs[i] >= fs[i + 1];
    if (!(left_ok && right_ok)) continue;
    const double lo = nodes_[i == 0 ? 0 : i - 1];
    const double hi = nodes_[i + 1 == count ? i : i + 1];
    const auto [x, v] = golden_max(f, lo, hi);
    if (v > report.sup) {
      report.sup = v;
      report.argmax = x;
    }
  }
  return report;
}

SupNormReport sup_sum_squares(std::span<const Polynomial> polys, double b, Weight w) {
  if (polys.empty()) throw InvalidInput("sup_sum_squares: empty polynomial list");
  std::size_t max_deg = 0;
  for (const auto& p : polys) max_deg = std::max(max_deg, p.degree().value_or(0));
  return SupNormEvaluator(b, max_deg, w)(polys);
}

}  // namespace chebext

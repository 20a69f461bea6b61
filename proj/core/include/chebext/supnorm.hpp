#ifndef CHEBEXT_SUPNORM_HPP
#define CHEBEXT_SUPNORM_HPP

#include <span>
#include <vector>

#include "chebext/polynomial.hpp"

namespace chebext {

/// Maximum of a sum of squared polynomials on [-b, b].
struct SupNormReport {
  double sup = 0.0;
  double argmax = 0.0;
  /// x-tolerance of the bracketed refinement.
  double attained_tol = 0.0;
};

/// Constraint weight: 1 for the plain problem, b^2 - x^2 for the second-kind one.
enum class Weight { none, second_kind };

/// Value of W(x) * sum_j P_j(x)^2.
[[nodiscard]] double constraint_value(std::span<const Polynomial> polys, double b, Weight w,
                                      double x) noexcept;

/// Reusable evaluator for families whose polynomials never exceed a given
/// degree; the Chebyshev grid is computed once.
class SupNormEvaluator {
 public:
  /// Throws InvalidInput for b outside (0, 10] or max_degree above 30.
  SupNormEvaluator(double b, std::size_t max_degree, Weight w = Weight::none);

  [[nodiscard]] SupNormReport operator()(std::span<const Polynomial> polys) const;
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] std::size_t grid_size() const noexcept { return nodes_.size(); }

 private:
  double b_;
  Weight weight_;
  std::vector<double> nodes_;
};

/// sup_{|x| <= b} W(x) * sum_j P_j(x)^2.
///
/// Scans 64 * (D + 1) Chebyshev-distributed nodes, D being the degree of the
/// weighted squared sum, then golden-section refines every grid local maximum
/// to 1e-12 in x. Throws InvalidInput on an empty list, b outside (0, 10] or
/// a squared-sum degree above 60.
[[nodiscard]] SupNormReport sup_sum_squares(std::span<const Polynomial> polys, double b,
                                            Weight w = Weight::none);

}  // namespace chebext

#endif  // CHEBEXT_SUPNORM_HPP

#ifndef CHEBEXT_ORACLE_HPP
#define CHEBEXT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "chebext/problem.hpp"

namespace chebext {

/// Best family found by the brute-force search, already rescaled to be feasible.
struct OracleResult {
  double best_value = 0.0;
  std::map<int, Polynomial> best_coeffs;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
};

struct BruteForceOptions {
  std::size_t restarts = 50;
  /// Restarts are independent; results do not depend on this.
  unsigned threads = 1;
};

/// Maximizes sum_j m_j^2 / sup W(x) sum_j P_j(x)^2 over raw coefficient
/// vectors with restarted Nelder-Mead. Both numerator and denominator are
/// 2-homogeneous, so the supremum of this ratio is the optimum of the
/// constrained problem. Restart starting points come from (seed, restart).
/// Throws InvalidInput for n > 5 or budget < 1000.
[[nodiscard]] OracleResult brute_force_max(const ProblemSpec& spec, std::size_t budget,
                                           std::uint64_t seed, const BruteForceOptions& opt = {});

/// Moment matrices are badly conditioned (monomial Hankel matrices), so they
/// are accumulated and factored in extended precision.
using MomentMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

/// Hankel moment matrices M_j(xi), entry (r, s) = int x^{r+s} dxi, for j in I.
struct MomentMatrixSet {
  std::map<int, MomentMatrix> matrices;
};

[[nodiscard]] MomentMatrixSet moment_matrices(const DiscreteMeasure& measure,
                                              const std::vector<int>& indices);

/// Residuals of the optimal-design equality conditions for a first-kind
/// solution, with witness N_j = alpha_j a_j a_j', a_j = sqrt(k_j) M_j^{-1} e_j.
struct CertificateReport {
  /// |sum_j trace(M_j N_j) - 1|
  double trace_residual = 0.0;
  /// max_j ||M_j N_j - e_j e_j' N_j / (e_j' M_j^{-1} e_j)||_F / ||M_j N_j||_F
  double matrix_residual = 0.0;
  /// max of |min_j k_j^M sum_j e'N_j e - 1| and |sum_j e'N_j e k_j^M - 1|,
  /// k_j^M = 1 / e_j' M_j^{-1} e_j.
  double minimum_residual = 0.0;
  /// max_j |e_j' M_j^{-1} e_j k_j - 1|
  double identity_residual = 0.0;
  /// Set when some M_j is not positive definite.
  std::optional<int> singular_index;

  [[nodiscard]] bool ok(double tol = 1e-8) const noexcept {
    return !singular_index && trace_residual <= tol && matrix_residual <= tol &&
           minimum_residual <= tol && identity_residual <= tol;
  }
};

/// Throws InvalidInput when sol carries no terminating dual moments.
[[nodiscard]] CertificateReport duality_certificate(const ExtremalSolution& sol,
                                                    const ProblemSpec& spec);

}  // namespace chebext

#endif  // CHEBEXT_ORACLE_HPP

#include "chebext/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>

#include "chebext/errors.hpp"

namespace chebext {

namespace {

// Cholesky pivots below this fraction of the diagonal mark M_j as singular.
constexpr long double kPivotFloor = 1e-13L;

}  // namespace

MomentMatrixSet moment_matrices(const DiscreteMeasure& measure, const std::vector<int>& indices) {
  const int top = indices.empty() ? 0 : *std::max_element(indices.begin(), indices.end());
  std::vector<long double> moments(static_cast<std::size_t>(2 * top + 1), 0.0L);
  for (std::size_t s = 0; s < measure.points.size(); ++s) {
    long double power = measure.weights[s];
    for (auto& m : moments) {
      m += power;
      power *= static_cast<long double>(measure.points[s]);
    }
  }
  MomentMatrixSet out;
  for (int j : indices) {
    MomentMatrix m(j + 1, j + 1);
    for (int r = 0; r <= j; ++r)
      for (int c = 0; c <= j; ++c) m(r, c) = moments[static_cast<std::size_t>(r + c)];
    out.matrices.emplace(j, std::move(m));
  }
  return out;
}

CertificateReport duality_certificate(const ExtremalSolution& sol, const ProblemSpec& spec) {
  if (!sol.dual_moments || !sol.dual_moments->terminating())
    throw InvalidInput("duality_certificate: solution has no terminating dual moments");
  const CanonicalMomentSeq& cm = *sol.dual_moments;
  const DiscreteMeasure measure = support_measure(cm);
  const MomentMatrixSet mset = moment_matrices(measure, spec.indices());
  const std::vector<double> k = l2_norms(cm, spec.n());

  CertificateReport rep;
  double trace_sum = 0.0;
  double diag_sum = 0.0;     // sum_j e'N_j e
  double weighted_sum = 0.0; // sum_j e'N_j e / (e'M_j^{-1} e)
  double k_min = std::numeric_limits<double>::infinity();

  using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  for (int j : spec.indices()) {
    const MomentMatrix& m = mset.matrices.at(j);
    Eigen::LLT<MomentMatrix> llt(m);
    // A rank-deficient M_j (fewer support points than j + 1) factors with
    // pivots at rounding level rather than failing outright.
    bool singular = llt.info() != Eigen::Success;
    if (!singular) {
      const MomentMatrix l = llt.matrixL();
      for (int i = 0; i <= j && !singular; ++i)
        singular = !(l(i, i) * l(i, i) > kPivotFloor * m(i, i));
    }
    if (singular) {
      rep.singular_index = j;
      return rep;
    }
    Vec e = Vec::Zero(j + 1);
    e(j) = 1.0L;
    const Vec minv_e = llt.solve(e);
    const long double quad = minv_e(j);
    const long double kj = k.at(static_cast<std::size_t>(j - 1));
    const auto alpha_it = sol.alphas.find(j);
    const long double alpha = alpha_it == sol.alphas.end() ? 0.0L : alpha_it->second;

    const Vec a = std::sqrt(kj) * minv_e;
    const MomentMatrix n_j = alpha * a * a.transpose();
    const MomentMatrix mn = m * n_j;
    const MomentMatrix rhs = e * (e.transpose() * n_j) / quad;

    trace_sum += static_cast<double>(mn.trace());
    const long double scale = mn.norm();
    if (scale > 0.0L)
      rep.matrix_residual =
          std::max(rep.matrix_residual, static_cast<double>((mn - rhs).norm() / scale));
    rep.identity_residual =
        std::max(rep.identity_residual, static_cast<double>(std::abs(quad * kj - 1.0L)));

    const double diag = static_cast<double>(n_j(j, j));
    diag_sum += diag;
    weighted_sum += static_cast<double>(n_j(j, j) / quad);
    k_min = std::min(k_min, static_cast<double>(1.0L / quad));
  }

  rep.trace_residual = std::abs(trace_sum - 1.0);
  rep.minimum_residual = std::max(std::abs(k_min * diag_sum - 1.0), std::abs(weighted_sum - 1.0));
  return rep;
}

}  // namespace chebext

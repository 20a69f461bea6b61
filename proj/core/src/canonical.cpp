#include "chebext/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "chebext/errors.hpp"

namespace chebext {

CanonicalMomentSeq::CanonicalMomentSeq(double b, std::vector<double> p) : b_(b), p_(std::move(p)) {
  if (!(b_ > 0.0) || !std::isfinite(b_)) throw InvalidInput("canonical moments: b must be positive");
  for (std::size_t k = 0; k < p_.size(); ++k) {
    const double v = p_[k];
    if (!(v >= 0.0 && v <= 1.0))
      throw InvalidInput("canonical moments: p_" + std::to_string(k + 1) + " outside [0, 1]");
    if ((v == 0.0 || v == 1.0) && k + 1 != p_.size())
      throw InvalidInput("canonical moments: p_" + std::to_string(k + 1) +
                         " terminates the sequence but is not last");
  }
}

bool CanonicalMomentSeq::terminating() const noexcept {
  return !p_.empty() && (p_.back() == 0.0 || p_.back() == 1.0);
}

double CanonicalMomentSeq::at(std::size_t k) const noexcept {
  return k >= 1 && k <= p_.size() ? p_[k - 1] : 0.0;
}

ZetaSeq zetas(const CanonicalMomentSeq& cm) {
  ZetaSeq out;
  const auto& p = cm.p();
  out.zeta.resize(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out.zeta[j] = j == 0 ? p[0] : (1.0 - p[j - 1]) * p[j];
  return out;
}

namespace {

void require_moments(const CanonicalMomentSeq& cm, std::size_t needed, const char* who) {
  if (cm.terminating() || cm.size() >= needed) return;
  throw InsufficientData(std::string(who) + ": need " + std::to_string(needed) +
                         " canonical moments, have " + std::to_string(cm.size()));
}

}  // namespace

std::vector<Polynomial> monic_orthopolys(const CanonicalMomentSeq& cm, int n) {
  if (n < 0) throw InvalidInput("monic_orthopolys: negative degree");
  if (n > kMaxDegree) throw DegreeLimit("monic_orthopolys: degree above 30");
  require_moments(cm, n == 0 ? 0 : static_cast<std::size_t>(2 * n - 1), "monic_orthopolys");

  const ZetaSeq z = zetas(cm);
  const double b = cm.b();
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  out.push_back(Polynomial::constant(1.0));
  if (n == 0) return out;
  out.push_back(Polynomial({b * (1.0 - 2.0 * z.at(1)), 1.0}));
  for (std::size_t j = 1; j < static_cast<std::size_t>(n); ++j) {
    const double shift = b * (1.0 - 2.0 * z.at(2 * j) - 2.0 * z.at(2 * j + 1));
    const double coupling = 4.0 * b * b * z.at(2 * j - 1) * z.at(2 * j);
    out.push_back(Polynomial({shift, 1.0}) * out[j] - coupling * out[j - 1]);
  }
  return out;
}

std::vector<double> l2_norms(const CanonicalMomentSeq& cm, int n) {
  if (n < 0) throw InvalidInput("l2_norms: negative degree");
  require_moments(cm, static_cast<std::size_t>(2 * n), "l2_norms");
  const ZetaSeq z = zetas(cm);
  const double four_b2 = 4.0 * cm.b() * cm.b();
  std::vector<double> out(static_cast<std::size_t>(n));
  double k = 1.0;
  for (std::size_t j = 1; j <= out.size(); ++j) {
    k *= four_b2 * z.at(2 * j - 1) * z.at(2 * j);
    out[j - 1] = k;
  }
  return out;
}

JacobiMatrix jacobi_matrix(const CanonicalMomentSeq& cm, int m) {
  const ZetaSeq z = zetas(cm);
  const double b = cm.b();
  JacobiMatrix jm;
  const auto size = static_cast<std::size_t>(m) + 1;
  jm.diagonal.resize(size);
  jm.off_diagonal.resize(size - 1);
  jm.diagonal[0] = b * (2.0 * z.at(1) - 1.0);
  for (std::size_t j = 1; j < size; ++j) {
    jm.diagonal[j] = b * (2.0 * z.at(2 * j) + 2.0 * z.at(2 * j + 1) - 1.0);
    jm.off_diagonal[j - 1] = std::sqrt(4.0 * b * b * z.at(2 * j - 1) * z.at(2 * j));
  }
  return jm;
}

DiscreteMeasure support_measure(const CanonicalMomentSeq& cm) {
  if (!cm.terminating()) throw InvalidInput("support_measure: canonical moments do not terminate");

  // p_L in {0, 1} forces zeta_{L+1} = 0, so at most ceil(L/2) + 1 points carry mass;
  // an earlier vanishing coupling splits off the remaining block.
  const int steps = static_cast<int>((cm.size() + 1) / 2);
  JacobiMatrix jm = jacobi_matrix(cm, steps);
  std::size_t size = jm.diagonal.size();
  for (std::size_t j = 0; j < jm.off_diagonal.size(); ++j) {
    if (jm.off_diagonal[j] == 0.0) {
      size = j + 1;
      break;
    }
  }

  Eigen::VectorXd diag(static_cast<Eigen::Index>(size));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(size > 0 ? size - 1 : 0));
  for (std::size_t i = 0; i < size; ++i) diag(static_cast<Eigen::Index>(i)) = jm.diagonal[i];
  for (std::size_t i = 0; i + 1 < size; ++i) sub(static_cast<Eigen::Index>(i)) = jm.off_diagonal[i];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw InvalidInput("support_measure: eigensolver failed");

  DiscreteMeasure out;
  out.points.resize(size);
  out.weights.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto col = static_cast<Eigen::Index>(i);
    out.points[i] = solver.eigenvalues()(col);
    const double v = solver.eigenvectors()(0, col);
    out.weights[i] = v * v;
  }
  return out;
}

double orthogonality_defect(const DiscreteMeasure& measure, const std::vector<Polynomial>& monic,
                            const std::vector<double>& norms) {
  // norms[j - 1] = k_j; k_0 = 1.
  auto norm = [&](std::size_t j) { return j == 0 ? 1.0 : norms.at(j - 1); };
  double worst = 0.0;
  for (std::size_t i = 0; i < monic.size(); ++i) {
    for (std::size_t j = i; j < monic.size(); ++j) {
      double gram = 0.0;
      for (std::size_t s = 0; s < measure.points.size(); ++s)
        gram += measure.weights[s] * monic[i](measure.points[s]) * monic[j](measure.points[s]);
      const double defect = i == j ? std::abs(gram - norm(i)) / norm(i)
                                   : std::abs(gram) / std::max(norm(i), norm(j));
      worst = std::max(worst, defect);
    }
  }
  return worst;
}

}  // namespace chebext

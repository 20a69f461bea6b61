#ifndef CHEBEXT_CANONICAL_HPP
#define CHEBEXT_CANONICAL_HPP

#include <vector>

#include "chebext/polynomial.hpp"

namespace chebext {

/// Canonical moments p_1, ..., p_L of a probability measure on [-b, b].
///
/// Every entry lies in [0, 1]. An entry equal to 0 or 1 ends the continued
/// fraction, so it may only appear last; such a sequence is terminating and
/// describes a measure with finite support.
class CanonicalMomentSeq {
 public:
  /// Throws InvalidInput on b <= 0, entries outside [0, 1] or an interior 0/1.
  CanonicalMomentSeq(double b, std::vector<double> p);

  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] const std::vector<double>& p() const noexcept { return p_; }
  [[nodiscard]] std::size_t size() const noexcept { return p_.size(); }
  [[nodiscard]] bool terminating() const noexcept;
  /// p_k with 1-based k; 0 past the end.
  [[nodiscard]] double at(std::size_t k) const noexcept;

  friend bool operator==(const CanonicalMomentSeq&, const CanonicalMomentSeq&) = default;

 private:
  double b_;
  std::vector<double> p_;
};

/// zeta_1 = p_1, zeta_j = (1 - p_{j-1}) p_j.
struct ZetaSeq {
  std::vector<double> zeta;

  /// zeta_j with 1-based j; 0 past the end, which is how a terminated
  /// continued fraction continues.
  [[nodiscard]] double at(std::size_t j) const noexcept {
    return j >= 1 && j <= zeta.size() ? zeta[j - 1] : 0.0;
  }
};

/// Finite probability measure: strictly increasing points, positive weights summing to 1.
struct DiscreteMeasure {
  std::vector<double> points;
  std::vector<double> weights;
};

[[nodiscard]] ZetaSeq zetas(const CanonicalMomentSeq& cm);

/// Monic orthogonal polynomials P_0, ..., P_n of the measure with moments cm:
///
///   P_0 = 1,  P_1 = x + b(1 - 2 zeta_1),
///   P_{j+1} = (x + b(1 - 2 zeta_{2j} - 2 zeta_{2j+1})) P_j - (2b)^2 zeta_{2j-1} zeta_{2j} P_{j-1}.
///
/// Needs p_1..p_{2n-1} unless cm terminates; throws InsufficientData otherwise.
[[nodiscard]] std::vector<Polynomial> monic_orthopolys(const CanonicalMomentSeq& cm, int n);

/// Squared L2 norms k_j = (2b)^{2j} prod_{i<=j} zeta_{2i-1} zeta_{2i}, j = 1..n
/// (returned at positions 0..n-1). Needs p_1..p_{2n} unless cm terminates.
[[nodiscard]] std::vector<double> l2_norms(const CanonicalMomentSeq& cm, int n);

/// Jacobi-matrix entries of the recurrence: diagonal a_0..a_m and off-diagonal
/// sqrt((2b)^2 zeta_{2j-1} zeta_{2j}), j = 1..m.
struct JacobiMatrix {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
};

/// Jacobi matrix of size m + 1 (m = number of recurrence steps requested).
[[nodiscard]] JacobiMatrix jacobi_matrix(const CanonicalMomentSeq& cm, int m);

/// Support points and weights of the finite measure a terminating sequence
/// describes (Golub-Welsch on the Jacobi matrix). Throws InvalidInput when
/// cm does not terminate.
[[nodiscard]] DiscreteMeasure support_measure(const CanonicalMomentSeq& cm);

/// Largest violation of discrete orthogonality of P_0..P_n against the
/// measure, relative to the norms: off-diagonal Gram entries divided by
/// max(k_i, k_j), diagonal entries by k_i.
[[nodiscard]] double orthogonality_defect(const DiscreteMeasure& measure,
                                          const std::vector<Polynomial>& monic,
                                          const std::vector<double>& norms);

}  // namespace chebext

#endif  // CHEBEXT_CANONICAL_HPP

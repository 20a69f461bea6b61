#ifndef CHEBEXT_PROBLEM_HPP
#define CHEBEXT_PROBLEM_HPP

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "chebext/canonical.hpp"
#include "chebext/polynomial.hpp"
#include "chebext/supnorm.hpp"

namespace chebext {

/// first: sup sum P_j^2 <= 1; second: sup (b^2 - x^2) sum P_j^2 <= 1.
enum class ProblemKind { first, second };

[[nodiscard]] std::string_view to_string(ProblemKind kind) noexcept;
/// Parses "first" / "second"; throws InvalidInput otherwise.
[[nodiscard]] ProblemKind parse_kind(std::string_view text);

/// Degrees I of the polynomial family and the half-width b of [-b, b].
///
/// Indices are kept sorted and distinct; n = max I is therefore always a
/// member. First-kind indices start at 1, second-kind ones at 0.
class ProblemSpec {
 public:
  /// Throws InvalidInput for an empty or duplicated index set, indices below
  /// the kind's minimum, n > 30 or b outside (0, 10].
  ProblemSpec(ProblemKind kind, std::vector<int> indices, double b);

  [[nodiscard]] ProblemKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<int>& indices() const noexcept { return indices_; }
  [[nodiscard]] double b() const noexcept { return b_; }
  [[nodiscard]] int n() const noexcept { return indices_.back(); }
  [[nodiscard]] bool contains(int j) const noexcept;
  /// I = {lo, ..., n} with lo = 1 (first kind) or 0 (second kind).
  [[nodiscard]] bool is_full() const noexcept;
  /// I = {n - 1, n}.
  [[nodiscard]] bool is_pair() const noexcept;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;

 private:
  ProblemKind kind_;
  std::vector<int> indices_;
  double b_;
};

/// Optimal polynomial family together with its dual data.
struct ExtremalSolution {
  /// index j -> P_j*, possibly the zero polynomial; nonzero entries have positive leading coefficient.
  std::map<int, Polynomial> polys;
  /// index j -> alpha_j; sums to 1 and vanishes off the active set.
  std::map<int, double> alphas;
  /// sum_j m_j(P_j*)^2
  double objective = 0.0;
  /// Phase index k when a closed form covers the index set.
  std::optional<int> phase_index;
  /// Canonical moments of the dual measure. Only available for the first kind.
  std::optional<CanonicalMomentSeq> dual_moments;
  /// Indices j attaining min k_j of the dual measure (all carriers of alpha mass).
  std::vector<int> active_set;
};

/// Sum of squared leading coefficients, m_j taken as the coefficient of x^j.
[[nodiscard]] double objective_of(const std::map<int, Polynomial>& polys);

/// Outcome of verify_solution. Checks never throw; each carries its own flag.
struct VerificationReport {
  SupNormReport constraint_sup;
  double objective = 0.0;
  /// (max - min) / min of k_j over the active set.
  double equimax_spread = 0.0;
  /// max over dual support points of |constraint - 1|.
  double support_attainment = 0.0;
  /// |objective * k_n - 1|.
  double duality_residual = 0.0;

  bool feasible = false;
  bool equimax_ok = false;
  bool attainment_ok = false;
  bool duality_ok = false;
  /// False when no dual measure is known (second kind): attainment then
  /// measures |sup - 1| and the duality residual compares against the
  /// closed-form optimum value.
  bool dual_available = false;

  [[nodiscard]] bool pass() const noexcept {
    return feasible && equimax_ok && attainment_ok && duality_ok;
  }
};

}  // namespace chebext

#endif  // CHEBEXT_PROBLEM_HPP

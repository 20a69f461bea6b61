#ifndef CHEBEXT_POLYNOMIAL_HPP
#define CHEBEXT_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace chebext {

/// Largest degree accepted by the Chebyshev constructors.
inline constexpr int kMaxDegree = 30;

/// Real polynomial in the monomial basis, coefficients in ascending powers.
///
/// Trailing zeros are trimmed on construction, so a nonzero polynomial
/// always has a nonzero leading coefficient. The zero polynomial has an
/// empty coefficient vector and no degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c);
  /// x -> x
  static Polynomial identity();

  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] std::optional<std::size_t> degree() const noexcept;
  /// Coefficient of the highest power; 0 for the zero polynomial.
  [[nodiscard]] double leading() const noexcept;
  [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i, 0 past the degree.
  [[nodiscard]] double coeff(std::size_t i) const noexcept;

  /// Horner evaluation.
  [[nodiscard]] double operator()(double x) const noexcept;

  /// q(x) = p(s * x)
  [[nodiscard]] Polynomial rescaled(double s) const;
  /// Same polynomial with the sign flipped if the leading coefficient is negative.
  [[nodiscard]] Polynomial with_positive_leading() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, double s) { return lhs *= s; }
  friend Polynomial operator*(double s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<double> coeffs_;
};

/// Evaluates p at x.
[[nodiscard]] inline double eval_poly(const Polynomial& p, double x) noexcept { return p(x); }

/// T_n on [-1, 1] from T_{k+1} = 2x T_k - T_{k-1}. Throws DegreeLimit for n > 30.
[[nodiscard]] Polynomial cheb_first(int n);

/// U_n on [-1, 1] from U_{k+1} = 2x U_k - U_{k-1}. Throws DegreeLimit for n > 30.
[[nodiscard]] Polynomial cheb_second(int n);

/// U_m(x) as a number, with the continuation U_{-1} = 0, U_{-2} = -1.
/// No degree cap; used for the U_m(b/2) ratios of the closed forms.
[[nodiscard]] double cheb_second_value(int m, double x) noexcept;

/// Largest absolute coefficient difference, treating missing entries as 0.
[[nodiscard]] double max_coeff_diff(const Polynomial& a, const Polynomial& b) noexcept;

}  // namespace chebext

#endif  // CHEBEXT_POLYNOMIAL_HPP

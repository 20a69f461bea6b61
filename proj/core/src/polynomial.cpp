#include "chebext/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chebext/errors.hpp"

namespace chebext {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(double c) { return Polynomial({c}); }

Polynomial Polynomial::identity() { return Polynomial({0.0, 1.0}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

double Polynomial::leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

double Polynomial::coeff(std::size_t i) const noexcept {
  return i < coeffs_.size() ? coeffs_[i] : 0.0;
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::rescaled(double s) const {
  std::vector<double> out(coeffs_.size());
  double power = 1.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = coeffs_[i] * power;
    power *= s;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::with_positive_leading() const {
  return leading() < 0.0 ? -1.0 * *this : *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<double> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

namespace {

Polynomial chebyshev_recurrence(int n, const Polynomial& first, const char* name) {
  if (n < 0) throw InvalidInput(std::string(name) + ": negative degree");
  if (n > kMaxDegree)
    throw DegreeLimit(std::string(name) + ": degree " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxDegree));
  Polynomial prev = Polynomial::constant(1.0);
  if (n == 0) return prev;
  Polynomial cur = first;
  const Polynomial two_x({0.0, 2.0});
  for (int k = 1; k < n; ++k) {
    Polynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Polynomial cheb_first(int n) { return chebyshev_recurrence(n, Polynomial({0.0, 1.0}), "cheb_first"); }

Polynomial cheb_second(int n) {
  return chebyshev_recurrence(n, Polynomial({0.0, 2.0}), "cheb_second");
}

double cheb_second_value(int m, double x) noexcept {
  if (m == -1) return 0.0;
  if (m == -2) return -1.0;
  if (m < -2) return -cheb_second_value(-m - 2, x);
  double prev = 1.0;
  if (m == 0) return prev;
  double cur = 2.0 * x;
  for (int k = 1; k < m; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double max_coeff_diff(const Polynomial& a, const Polynomial& b) noexcept {
  const std::size_t len = std::max(a.coeffs().size(), b.coeffs().size());
  double worst = 0.0;
  for (std::size_t i = 0; i < len; ++i) worst = std::max(worst, std::abs(a.coeff(i) - b.coeff(i)));
  return worst;
}

}  // namespace chebext

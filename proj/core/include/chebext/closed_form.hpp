#ifndef CHEBEXT_CLOSED_FORM_HPP
#define CHEBEXT_CLOSED_FORM_HPP

#include "chebext/problem.hpp"

namespace chebext {

/// Positivity threshold used for "U_m(b/2) > 0" in the phase conditions.
inline constexpr double kThresholdEps = 1e-12;

/// Phase index k.
///
/// first:  smallest j in 1..n   with U_{2n-2i+1}(b/2) > 0 for all i = j..n.
/// second: smallest j in 1..n+1 with U_{2n-2i+3}(b/2) > 0 for all i = j..n+1.
[[nodiscard]] int threshold_index(int n, double b, ProblemKind kind);

/// 2^{2k-2} b^{1-2k} U_{n-k}(b/2) / U_{n-k+1}(b/2): optimum of I = {1..n} in phase k.
[[nodiscard]] double first_full_value(int n, double b, int k);
/// 2^{2k-2} b^{1-2k} U_{n-k+1}(b/2) / U_{n-k+2}(b/2): optimum of the second kind, I = {0..n}.
[[nodiscard]] double second_full_value(int n, double b, int k);
/// Optimum of I = {n-1, n}, first kind.
[[nodiscard]] double pair_first_value(int n, double b);
/// Optimum of I = {n-1, n}, second kind.
[[nodiscard]] double pair_second_value(int n, double b);

/// Explicit optimum for I = {1, ..., n}, first kind. Dual moments are filled
/// from the U(b/2) ratio form of the even canonical moments.
[[nodiscard]] ExtremalSolution closed_form_first_full(int n, double b);

/// Explicit optimum for I = {n-1, n}, first kind; n >= 2.
[[nodiscard]] ExtremalSolution closed_form_pair_first(int n, double b);

/// Explicit optimum for I = {0, ..., n}, second kind; 0 <= n <= 30.
[[nodiscard]] ExtremalSolution closed_form_second_full(int n, double b);

/// Explicit optimum for I = {n-1, n}, second kind; n >= 1.
[[nodiscard]] ExtremalSolution closed_form_pair_second(int n, double b);

}  // namespace chebext

#endif  // CHEBEXT_CLOSED_FORM_HPP

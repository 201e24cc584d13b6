#pragma once

#include <optional>

#include "pdcop/lambda.hpp"

namespace pdcop {

/// Absolute tolerance on the t-residual of the pseudo-inverse.
inline constexpr double kInverseTol = 1e-12;
inline constexpr int kInverseMaxIter = 200;

/// Power-divergence generator
///   phi(x) = (x^(l+1) - x + l (1 - x)) / (l (l + 1)),
/// with the limits 1 - x + x log x at l = 0 and x - 1 - log x at l = -1.
/// Defined for x >= 0; phi(0) is +inf for l <= -1.
double phi(const Lambda& lambda, double x);

/// First derivative (x^l - 1) / l, log x at l = 0; x > 0.
double phi_prime(const Lambda& lambda, double x);

/// Second derivative x^(l - 1); x > 0.
double phi_second(const Lambda& lambda, double x);

/// phi(0): 1 / (l + 1) for l > -1, +inf otherwise.
double phi_at_zero(const Lambda& lambda);

enum class InverseMethod {
    Auto,        ///< Lambert W at l in {-1, 0}, closed forms at l in {-2, -0.5, 1}, root finding otherwise
    RootFinder,  ///< always the bracketed root finder
};

/// Pseudo-inverse: 0 for t >= phi(0), otherwise the unique x in (0, 1] with phi(x) = t.
/// t = +inf maps to 0.
double pseudo_inverse(const Lambda& lambda, double t, InverseMethod method = InverseMethod::Auto);

/// Radical solutions of phi(x) = t at l in {-2, -0.5, 1}; empty for other l.
std::optional<double> closed_form_inverse(const Lambda& lambda, double t);

namespace detail {

/// phi(e^log_x). Accurate near x = 1 where the textbook formula cancels.
double phi_of_log(const Lambda& lambda, double log_x);

/// phi'(e^log_x).
double phi_prime_of_log(const Lambda& lambda, double log_x);

/// phi(s) / phi'(s) for s in (0, 1), finite even where phi and phi' overflow.
double phi_over_phi_prime(const Lambda& lambda, double s);

}  // namespace detail
}  // namespace pdcop

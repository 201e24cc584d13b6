#pragma once

#include <string>
#include <vector>

#include "pdcop/lambda.hpp"

namespace pdcop {

inline constexpr double kMonotoneTol = 1e-7;

/// Upper end of the check grid when phi(0) is infinite.
inline constexpr double kStrictGridMax = 50.0;

struct MonotoneReport {
    bool passed = true;
    std::string reason;  ///< first violated condition, empty when passed
    double at_t = 0.0;   ///< where it was violated
};

/// psi^(k)(t) for k = 0..order, psi the pseudo-inverse of phi, t in (0, phi(0)).
///
/// Taylor coefficients of psi around t follow from psi' = 1 / phi'(psi) by composing
/// truncated power series, so every order is exact up to rounding. All zeros where psi(t) underflows.
std::vector<double> pseudo_inverse_derivatives(const Lambda& lambda, double t, int order);

/// 200 points: log-spaced on [1e-6, kStrictGridMax] for strict generators; otherwise
/// 100 log-spaced on [1e-6, 0.5] phi(0) plus 100 accumulating at phi(0) from below.
std::vector<double> default_monotone_grid(const Lambda& lambda);

/// Numerical d-monotonicity of psi on the grid: (-1)^k psi^(k) >= -tol for k <= d-2,
/// (-1)^(d-2) psi^(d-2) non-increasing and convex, and for finite phi(0) the derivatives
/// up to order d-2 decaying to 0 at phi(0) so the extension by 0 stays smooth enough.
MonotoneReport check_d_monotone(const Lambda& lambda, int d, const std::vector<double>& grid);
MonotoneReport check_d_monotone(const Lambda& lambda, int d);

}  // namespace pdcop

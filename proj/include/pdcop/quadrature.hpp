#pragma once

#include <functional>

namespace pdcop {

/// Tolerance shared by every integral in the library.
inline constexpr double kQuadratureTol = 1e-10;

/// Adaptive 61-point Gauss-Kronrod integral of f over [a, b].
/// The endpoints are never evaluated, so removable endpoint singularities are harmless.
/// Throws NumericalError if the error estimate exceeds `tol` (absolute) after subdivision.
/// b may be +inf.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = kQuadratureTol);

/// Integral of f over (0, 1) with [0, 1/2] mapped by s = e^(-y), which turns algebraic and
/// logarithmic behaviour at 0 into exponential decay.
double integrate_unit_interval(const std::function<double(double)>& f, double tol = kQuadratureTol);

}  // namespace pdcop

#include "pdcop/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pdcop/errors.hpp"

namespace pdcop {

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    constexpr unsigned kMaxDepth = 15;
    // Relative target for the subdivision; the absolute bound `tol` is checked afterwards.
    constexpr double kRelativeTarget = 1e-13;
    using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
    double error = 0.0;
    double l1 = 0.0;
    Rule::integrate(f, a, b, 0, 0.0, &error, &l1);
    // Stop subdividing once the absolute bound is comfortably met, even for tiny integrals.
    const double target = std::max(kRelativeTarget, 0.1 * tol / std::max(l1, std::numeric_limits<double>::min()));
    const double value = Rule::integrate(f, a, b, kMaxDepth, target, &error);
    if (!std::isfinite(value) || error > tol) {
        throw NumericalError("integrate: error estimate above tolerance");
    }
    return value;
}

double integrate_unit_interval(const std::function<double(double)>& f, double tol) {
    const double right = integrate(f, 0.5, 1.0, 0.5 * tol);
    const double left = integrate(
        [&f](double y) {
            const double s = std::exp(-y);
            return s == 0.0 ? 0.0 : f(s) * s;
        },
        std::numbers::ln2, std::numeric_limits<double>::infinity(), 0.5 * tol);
    return left + right;
}

}  // namespace pdcop

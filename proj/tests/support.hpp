#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace pdcop::test {

inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    v.back() = b;
    return v;
}

inline std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v = linspace(std::log(a), std::log(b), n);
    for (double& x : v) x = std::exp(x);
    v.front() = a;
    v.back() = b;
    return v;
}

/// Interior points (i + 0.5) / n.
inline std::vector<double> midpoints(int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (i + 0.5) / n;
    return v;
}

inline const std::vector<double>& lambda_grid() {
    static const std::vector<double> grid{-10.0, -2.0, -1.0, -0.5, 0.0, 1.0, std::sqrt(2.0), 10.0};
    return grid;
}

struct MixedDifference {
    double value;
    double rounding;  ///< bound on the floating-point error of value itself
};

/// d^2 C / du dv by the fourth-order central stencil (1, -8, 8, -1) / 12h in each direction.
template <class Cdf>
MixedDifference mixed_difference(const Cdf& c, double u, double v, double h = 1e-3) {
    constexpr double w[4] = {1.0, -8.0, 8.0, -1.0};
    constexpr double offset[4] = {-2.0, -1.0, 1.0, 2.0};
    double sum = 0.0;
    double largest = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double value = c(u + offset[a] * h, v + offset[b] * h);
            sum += w[a] * w[b] * value;
            largest = std::max(largest, std::abs(value));
        }
    }
    const double scale = 144.0 * h * h;
    return {sum / scale, 324.0 * std::numeric_limits<double>::epsilon() * largest / scale};
}

}  // namespace pdcop::test

#include "pdcop/monotone.hpp"

#include <array>
#include <cmath>
#include <string>

#include "pdcop/errors.hpp"
#include "pdcop/generator.hpp"

namespace pdcop {
namespace {

using Series = std::vector<double>;

double effective(const Lambda& lambda) {
    switch (lambda.branch()) {
        case Branch::NegOne: return -1.0;
        case Branch::Zero: return 0.0;
        default: return lambda.value();
    }
}

// log of a series with positive constant term, truncated to n + 1 terms.
Series series_log(const Series& a, std::size_t n) {
    Series g(n + 1, 0.0);
    g[0] = std::log(a[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        double acc = a[k];
        for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) / k * g[j] * a[k - j];
        g[k] = acc / a[0];
    }
    return g;
}

// (exp(c g) - 1) / c as a series, exact in the constant term for small c g.
Series series_expm1_ratio(double c, const Series& g, std::size_t n) {
    if (c == 0.0) return Series(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n + 1));
    Series e(n + 1, 0.0);
    e[0] = std::exp(c * g[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * c * g[j] * e[k - j];
        e[k] = acc / k;
    }
    Series out(n + 1);
    out[0] = std::expm1(c * g[0]) / c;
    for (std::size_t k = 1; k <= n; ++k) out[k] = e[k] / c;
    return out;
}

Series series_reciprocal(const Series& d, std::size_t n) {
    Series r(n + 1, 0.0);
    r[0] = 1.0 / d[0];
    for (std::size_t k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) acc += d[j] * r[k - j];
        r[k] = -acc / d[0];
    }
    return r;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::string order_name(int k) { return "psi^(" + std::to_string(k) + ")"; }

}  // namespace

std::vector<double> pseudo_inverse_derivatives(const Lambda& lambda, double t, int order) {
    if (order < 0) throw DomainError("pseudo_inverse_derivatives: order must be non-negative");
    if (!(t > 0.0 && t < phi_at_zero(lambda))) {
        throw DomainError("pseudo_inverse_derivatives: t must lie in (0, phi(0))");
    }
    const double x = pseudo_inverse(lambda, t);
    // psi^(k) is of order psi(t) / (phi(0) - t)^k here, so below the smallest double as well.
    if (x == 0.0) return std::vector<double>(static_cast<std::size_t>(order) + 1, 0.0);

    const double l = effective(lambda);
    const auto n = static_cast<std::size_t>(order);
    Series a(n + 1, 0.0);
    a[0] = x;
    // a[k+1] = [1 / phi'(psi)]_k / (k + 1); the k-th coefficient only needs a[0..k].
    for (std::size_t k = 0; k < n; ++k) {
        const Series g = series_log(a, k);
        const Series d = series_expm1_ratio(l, g, k);
        const Series r = series_reciprocal(d, k);
        a[k + 1] = r[k] / static_cast<double>(k + 1);
    }
    std::vector<double> derivs(n + 1);
    double factorial = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) factorial *= static_cast<double>(k);
        derivs[k] = factorial * a[k];
    }
    return derivs;
}

std::vector<double> default_monotone_grid(const Lambda& lambda) {
    if (lambda.is_strict()) return logspace(1e-6, kStrictGridMax, 200);
    const double top = phi_at_zero(lambda);
    std::vector<double> grid = logspace(1e-6 * top, 0.5 * top, 100);
    for (double gap : logspace(0.5, 1e-8, 100)) grid.push_back(top - top * gap);
    return grid;
}

MonotoneReport check_d_monotone(const Lambda& lambda, int d, const std::vector<double>& grid) {
    if (d < 3) throw DomainError("check_d_monotone: d must be at least 3");
    const double top = phi_at_zero(lambda);
    for (double t : grid) {
        const bool inside = lambda.is_strict() ? (t > 0.0 && t <= kStrictGridMax) : (t > 0.0 && t < top);
        if (!inside) throw DomainError("check_d_monotone: grid point outside the domain of the pseudo-inverse");
    }

    MonotoneReport report;
    auto fail = [&](std::string reason, double t) {
        report.passed = false;
        report.reason = std::move(reason);
        report.at_t = t;
        return report;
    };
    const double sign_top = (d - 2) % 2 == 0 ? 1.0 : -1.0;
    for (double t : grid) {
        const std::vector<double> derivs = pseudo_inverse_derivatives(lambda, t, d);
        double sign = 1.0;
        for (int k = 0; k <= d - 2; ++k) {
            if (sign * derivs[static_cast<std::size_t>(k)] < -kMonotoneTol) {
                return fail(order_name(k) + " has the wrong sign", t);
            }
            sign = -sign;
        }
        if (sign_top * derivs[static_cast<std::size_t>(d - 1)] > kMonotoneTol) {
            return fail("(-1)^(d-2) " + order_name(d - 2) + " is not non-increasing", t);
        }
        if (sign_top * derivs[static_cast<std::size_t>(d)] < -kMonotoneTol) {
            return fail("(-1)^(d-2) " + order_name(d - 2) + " is not convex", t);
        }
    }

    if (!lambda.is_strict()) {
        // psi is extended by 0 beyond phi(0); derivatives up to order d-2 must vanish there.
        constexpr std::array<double, 3> gaps{1e-4, 1e-6, 1e-8};
        std::array<std::vector<double>, 3> near;
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            near[i] = pseudo_inverse_derivatives(lambda, top - top * gaps[i], d - 2);
        }
        for (int k = 1; k <= d - 2; ++k) {
            const auto kk = static_cast<std::size_t>(k);
            const double first = std::abs(near[0][kk]);
            const double last = std::abs(near[2][kk]);
            if (last > kMonotoneTol && last > 0.5 * first) {
                return fail(order_name(k) + " does not vanish at phi(0)", top);
            }
        }
    }
    return report;
}

MonotoneReport check_d_monotone(const Lambda& lambda, int d) {
    return check_d_monotone(lambda, d, default_monotone_grid(lambda));
}

}  // namespace pdcop

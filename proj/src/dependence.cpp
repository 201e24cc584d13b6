#include "pdcop/dependence.hpp"

#include <cmath>
#include <numbers>

#include "pdcop/errors.hpp"
#include "pdcop/generator.hpp"
#include "pdcop/quadrature.hpp"

namespace pdcop {

double kendall_tau_quadrature(const Lambda& lambda) {
    const double integral =
        integrate_unit_interval([&](double s) { return detail::phi_over_phi_prime(lambda, s); });
    return 1.0 + 4.0 * integral;
}

double kendall_tau(const Lambda& lambda) {
    switch (lambda.branch()) {
        case Branch::Zero: return 3.0 - 4.0 * std::numbers::ln2;
        case Branch::NegOne: return 7.0 - 2.0 * std::numbers::pi * std::numbers::pi / 3.0;
        default: return kendall_tau_quadrature(lambda);
    }
}

Lambda tau_inverse(double tau) {
    if (!(std::abs(tau) < 1.0)) throw DomainError("tau_inverse: tau must lie in (-1, 1)");
    // kendall_tau decreases in lambda.
    auto f = [tau](double l) { return kendall_tau(Lambda(l)) - tau; };
    constexpr int kMaxExpansions = 60;
    constexpr int kMaxBisections = 200;

    double lo = -1.0;
    double hi = 1.0;
    double f_lo = f(lo);
    for (int i = 0; f_lo < 0.0; ++i) {
        if (i == kMaxExpansions) throw NumericalError("tau_inverse: could not bracket tau");
        hi = lo;
        lo *= 2.0;
        f_lo = f(lo);
    }
    double f_hi = f(hi);
    for (int i = 0; f_hi > 0.0; ++i) {
        if (i == kMaxExpansions) throw NumericalError("tau_inverse: could not bracket tau");
        lo = hi;
        hi *= 2.0;
        f_hi = f(hi);
    }
    if (f_lo == 0.0) return Lambda(lo);
    if (f_hi == 0.0) return Lambda(hi);

    for (int i = 0; i < kMaxBisections; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f_mid = f(mid);
        if (f_mid == 0.0) return Lambda(mid);
        if (f_mid > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return Lambda(0.5 * (lo + hi));
}

TailCoefficients tail_dependence(const Lambda& lambda) {
    TailCoefficients tails{0.0, 2.0 - std::numbers::sqrt2};
    if (lambda.branch() == Branch::BelowNegOne) tails.lower = std::exp2(1.0 / (lambda.value() + 1.0));
    return tails;
}

}  // namespace pdcop

#include "pdcop/generator.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "pdcop/errors.hpp"
#include "pdcop/lambert_w.hpp"

namespace pdcop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Effective lambda: exact -1 or 0 inside the branch windows.
double effective(const Lambda& lambda) {
    switch (lambda.branch()) {
        case Branch::NegOne: return -1.0;
        case Branch::Zero: return 0.0;
        default: return lambda.value();
    }
}

// expm1(c L) / c, with the c -> 0 limit L.
double expm1_ratio(double c, double log_x) {
    if (c == 0.0) return log_x;
    return std::expm1(c * log_x) / c;
}

// Taylor series of phi around x = 1 in powers of L = log x:
//   phi = sum_{k>=2} (1 + a + ... + a^(k-2)) L^k / k!,  a = lambda + 1.
// Free of any division by lambda or lambda + 1.
double phi_series(double a, double log_x) {
    double term = log_x;  // L^k / k! at k = 1
    double geometric = 0.0;
    double geometric_bound = 0.0;  // sum of |a|^j; geometric itself can vanish, e.g. at a = -1
    double a_power = 1.0;
    double sum = 0.0;
    for (int k = 2; k < 80; ++k) {
        term *= log_x / k;
        geometric += a_power;
        geometric_bound += std::abs(a_power);
        a_power *= a;
        sum += geometric * term;
        if (std::abs(geometric_bound * term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace

double phi_at_zero(const Lambda& lambda) {
    if (lambda.is_strict()) return kInf;
    return 1.0 / (effective(lambda) + 1.0);
}

namespace detail {

double phi_of_log(const Lambda& lambda, double log_x) {
    if (log_x == -kInf) return phi_at_zero(lambda);
    const double l = effective(lambda);
    const double a = l + 1.0;
    if (std::abs(log_x) < 0.1 && std::abs(a * log_x) < 1.0) return phi_series(a, log_x);

    switch (lambda.branch()) {
        case Branch::Zero: return std::exp(log_x) * log_x - std::expm1(log_x);
        case Branch::NegOne: return std::expm1(log_x) - log_x;
        default: break;
    }
    if (std::abs(l) <= 0.5) {
        // (x (x^l - 1) / l - (x - 1)) / (l + 1), exact as l -> 0
        const double x = std::exp(log_x);
        if (x == 0.0) return phi_at_zero(lambda);
        return (x * expm1_ratio(l, log_x) - std::expm1(log_x)) / a;
    }
    // ((x^(l+1) - 1) / (l + 1) - (x - 1)) / l, exact as l -> -1
    return (expm1_ratio(a, log_x) - std::expm1(log_x)) / l;
}

double phi_prime_of_log(const Lambda& lambda, double log_x) {
    return expm1_ratio(effective(lambda), log_x);
}

double phi_over_phi_prime(const Lambda& lambda, double s) {
    const double log_s = std::log(s);
    const double ratio = phi_of_log(lambda, log_s) / phi_prime_of_log(lambda, log_s);
    if (std::isfinite(ratio)) return ratio;
    // Both overflow only for lambda < -1 near s = 0. Multiply through by q = s^(-lambda).
    const double l = effective(lambda);
    const double a = l + 1.0;
    const double q = std::exp(-l * log_s);
    return (s - q - a * q * (s - 1.0)) / (a * (1.0 - q));
}

}  // namespace detail

double phi(const Lambda& lambda, double x) {
    if (!(x >= 0.0)) throw DomainError("phi: x must be non-negative");
    if (x == 0.0) return phi_at_zero(lambda);
    return detail::phi_of_log(lambda, std::log(x));
}

double phi_prime(const Lambda& lambda, double x) {
    if (!(x > 0.0)) throw DomainError("phi_prime: x must be positive");
    return detail::phi_prime_of_log(lambda, std::log(x));
}

double phi_second(const Lambda& lambda, double x) {
    if (!(x > 0.0)) throw DomainError("phi_second: x must be positive");
    return std::exp((effective(lambda) - 1.0) * std::log(x));
}

std::optional<double> closed_form_inverse(const Lambda& lambda, double t) {
    const double l = lambda.value();
    if (l != -2.0 && l != -0.5 && l != 1.0) return std::nullopt;
    if (!(t >= 0.0)) throw DomainError("closed_form_inverse: t must be non-negative");
    if (l == -2.0) {
        // phi = (1 - x)^2 / (2x): the root of x^2 - 2(1 + t) x + 1 inside [0, 1]
        if (std::isinf(t)) return 0.0;
        return 1.0 / (1.0 + t + std::sqrt(t * (t + 2.0)));
    }
    if (l == -0.5) {
        // phi = 2 (1 - sqrt x)^2, phi(0) = 2
        if (t >= 2.0) return 0.0;
        const double r = 1.0 - std::sqrt(0.5 * t);
        return r * r;
    }
    // l == 1: phi = (1 - x)^2 / 2, phi(0) = 1/2
    if (t >= 0.5) return 0.0;
    return 1.0 - std::sqrt(2.0 * t);
}

namespace {

double lambert_inverse(const Lambda& lambda, double t) {
    if (lambda.branch() == Branch::NegOne) {
        // x = -W0(-exp(-(t + 1))); the Lambert offset 1 + e y equals 1 - e^(-t).
        // Far from the branch point the argument itself is exact, the offset is not.
        const double offset = -std::expm1(-t);
        if (offset >= 0.25) return -lambert_w0(-std::exp(-(1.0 + t)));
        return -detail::lambert_w_from_offset(offset, detail::LambertBranch::Principal);
    }
    // Zero: x = exp(W-1((t - 1) / e) + 1); the Lambert offset equals t, and t < 1 here.
    return std::exp(detail::lambert_w_from_offset(t, detail::LambertBranch::Lower) + 1.0);
}

double root_inverse(const Lambda& lambda, double t) {
    // Solve phi(e^L) = t for L in (-inf, 0]; phi(e^L) decreases in L.
    auto f = [&](double log_x) { return detail::phi_of_log(lambda, log_x) - t; };

    double hi = 0.0;
    double f_hi = -t;
    double lo = -1.0;
    double f_lo = f(lo);
    constexpr double kLogUnderflow = -745.0;
    while (f_lo <= 0.0) {
        hi = lo;
        f_hi = f_lo;
        lo *= 2.0;
        if (lo < kLogUnderflow) return 0.0;  // the root is below the smallest subnormal
        f_lo = f(lo);
    }
    // Cut back an overflowing lower end so the interpolation steps stay finite.
    while (!std::isfinite(f_lo)) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
        }
    }
    if (f_hi == 0.0) return std::exp(hi);

    std::uintmax_t iterations = kInverseMaxIter;
    const auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2);
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iterations);
    if (iterations >= static_cast<std::uintmax_t>(kInverseMaxIter)) {
        throw NumericalError("pseudo_inverse: root finder did not converge");
    }
    return std::exp(0.5 * (a + b));
}

}  // namespace

double pseudo_inverse(const Lambda& lambda, double t, InverseMethod method) {
    if (!(t >= 0.0)) throw DomainError("pseudo_inverse: t must be non-negative");
    if (t == 0.0) return 1.0;
    if (t >= phi_at_zero(lambda)) return 0.0;

    if (method == InverseMethod::Auto) {
        if (lambda.branch() == Branch::NegOne || lambda.branch() == Branch::Zero) return lambert_inverse(lambda, t);
        if (auto x = closed_form_inverse(lambda, t)) return *x;
    }
    return root_inverse(lambda, t);
}

}  // namespace pdcop

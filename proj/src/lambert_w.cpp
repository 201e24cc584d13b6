#include "pdcop/lambert_w.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pdcop/errors.hpp"

namespace pdcop {
namespace {

constexpr double kE = std::numbers::e;
constexpr double kInvE = 1.0 / std::numbers::e;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 50;

// Offsets below this are handled by the branch-point expansion.
constexpr double kNearBranchOffset = 0.25;

// g(v) = (v - 1) e^v + 1, i.e. 1 + e * (w e^w) with w = v - 1.
double branch_residual(double v) {
    if (std::abs(v) < 0.5) {
        // sum_{k>=2} (k - 1) v^k / k!
        double term = v;  // v^k / k! at k = 1
        double sum = 0.0;
        for (int k = 2; k < 40; ++k) {
            term *= v / k;
            const double add = (k - 1) * term;
            sum += add;
            if (std::abs(add) <= 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    return (v - 1.0) * std::exp(v) + 1.0;
}

double near_branch(double offset, detail::LambertBranch branch) {
    const double sign = branch == detail::LambertBranch::Principal ? 1.0 : -1.0;
    const double p = sign * std::sqrt(2.0 * offset);
    // Series of W + 1 in p around the branch point.
    double v = p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0 +
                                                                     p * (769.0 / 17280.0 - p * 221.0 / 8505.0)))));
    for (int i = 0; i < kMaxIterations; ++i) {
        const double ev = std::exp(v);
        const double f = branch_residual(v) - offset;
        const double f1 = v * ev;
        const double f2 = (v + 1.0) * ev;
        if (f1 == 0.0) break;
        const double step = f / (f1 - 0.5 * f * f2 / f1);
        v -= step;
        if (std::abs(step) <= 2.0 * kEps * std::abs(v)) break;
    }
    return v - 1.0;
}

}  // namespace

namespace detail {

double lambert_w_from_offset(double offset, LambertBranch branch) {
    if (!(offset >= 0.0)) throw DomainError("lambert_w: argument below -1/e");
    if (offset == 0.0) return -1.0;
    if (offset < kNearBranchOffset) return near_branch(offset, branch);
    const double y = (offset - 1.0) * kInvE;
    return branch == LambertBranch::Principal ? lambert_w0(y) : lambert_wm1(y);
}

}  // namespace detail

double lambert_w0(double y) {
    if (std::isnan(y)) throw DomainError("lambert_w0: NaN argument");
    if (y < -kInvE) {
        if (y >= -kInvE * (1.0 + 4.0 * kEps)) return -1.0;
        throw DomainError("lambert_w0: argument below -1/e");
    }
    if (y == 0.0) return 0.0;
    if (std::isinf(y)) return y;

    const double offset = std::fma(kE, y, 1.0);
    if (offset < kNearBranchOffset) return near_branch(std::max(offset, 0.0), detail::LambertBranch::Principal);

    double w;
    if (y > kE) {
        // Solve w + log(w) = log(y); keeps every quantity finite for huge y.
        const double log_y = std::log(y);
        const double ll = std::log(log_y);
        w = log_y - ll + ll / log_y;
        for (int i = 0; i < kMaxIterations; ++i) {
            const double f = w + std::log(w) - log_y;
            const double f1 = 1.0 + 1.0 / w;
            const double f2 = -1.0 / (w * w);
            const double step = f / (f1 - 0.5 * f * f2 / f1);
            w -= step;
            if (std::abs(step) <= 2.0 * kEps * std::abs(w)) break;
        }
        return w;
    }

    w = std::log1p(y);
    for (int i = 0; i < kMaxIterations; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - y;
        const double f1 = ew * (w + 1.0);
        const double step = f / (f1 - (w + 2.0) * f / (2.0 * w + 2.0));
        w -= step;
        if (std::abs(step) <= 2.0 * kEps * std::max(std::abs(w), std::numeric_limits<double>::min())) break;
    }
    return w;
}

double lambert_wm1(double y) {
    if (std::isnan(y)) throw DomainError("lambert_wm1: NaN argument");
    if (y >= 0.0) throw DomainError("lambert_wm1: argument must be negative");
    if (y < -kInvE) {
        if (y >= -kInvE * (1.0 + 4.0 * kEps)) return -1.0;
        throw DomainError("lambert_wm1: argument below -1/e");
    }

    const double offset = std::fma(kE, y, 1.0);
    if (offset < kNearBranchOffset) return near_branch(std::max(offset, 0.0), detail::LambertBranch::Lower);

    // Solve w + log(-w) = log(-y) on w <= -1, valid down to the smallest subnormal y.
    const double log_my = std::log(-y);
    const double ll = std::log(-log_my);
    double w = log_my - ll + ll / log_my;
    for (int i = 0; i < kMaxIterations; ++i) {
        const double f = w + std::log(-w) - log_my;
        const double f1 = 1.0 + 1.0 / w;
        const double f2 = -1.0 / (w * w);
        const double step = f / (f1 - 0.5 * f * f2 / f1);
        w -= step;
        if (std::abs(step) <= 2.0 * kEps * std::abs(w)) break;
    }
    return w;
}

}  // namespace pdcop

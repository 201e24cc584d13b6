#include "pdcop/reference_copulas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include <boost/math/tools/roots.hpp>

#include "pdcop/errors.hpp"
#include "pdcop/parallel.hpp"
#include "pdcop/quadrature.hpp"
#include "pdcop/simulate.hpp"

namespace pdcop {
namespace {

constexpr int kRootIterations = 200;

double clayton_cdf(double theta, double u, double v) {
    if (u == 0.0 || v == 0.0) return 0.0;
    return std::pow(std::pow(u, -theta) + std::pow(v, -theta) - 1.0, -1.0 / theta);
}

double gumbel_cdf(double theta, double u, double v) {
    if (u == 0.0 || v == 0.0) return 0.0;
    const double x = -std::log(u);
    const double y = -std::log(v);
    return std::exp(-std::pow(std::pow(x, theta) + std::pow(y, theta), 1.0 / theta));
}

double frank_cdf(double theta, double u, double v) {
    return -std::log1p(std::expm1(-theta * u) * std::expm1(-theta * v) / std::expm1(-theta)) / theta;
}

double joe_cdf(double theta, double u, double v) {
    const double a = std::pow(1.0 - u, theta);
    const double b = std::pow(1.0 - v, theta);
    return 1.0 - std::pow(a + b - a * b, 1.0 / theta);
}

double frank_tau(double theta) {
    if (theta < 0.0) return -frank_tau(-theta);
    // 1 + 4 (D1(theta) - 1) / theta with the Debye function D1
    const double integral = integrate([](double t) { return t / std::expm1(t) - 1.0; }, 0.0, theta);
    return 1.0 + 4.0 * integral / (theta * theta);
}

double joe_tau(double theta) {
    // 1 + 4 int_0^1 phi/phi' with phi(t) = -log(1 - (1 - t)^theta), written in w = 1 - t
    const double integral = integrate(
        [theta](double w) {
            const double p = std::pow(w, theta);
            return std::log1p(-p) * (1.0 - p) / (theta * std::pow(w, theta - 1.0));
        },
        0.0, 1.0);
    return 1.0 + 4.0 * integral;
}

// Root of an increasing function on [lo, inf), expanding the upper end by doubling its distance.
template <class F>
double increasing_root(F f, double lo, double step) {
    double f_lo = f(lo);
    double hi = lo + step;
    double f_hi = f(hi);
    for (int i = 0; f_hi < 0.0; ++i) {
        if (i == 200) throw NumericalError("bench_tau_inverse: could not bracket the root");
        lo = hi;
        f_lo = f_hi;
        step *= 2.0;
        hi = lo + step;
        f_hi = f(hi);
    }
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    std::uintmax_t iterations = kRootIterations;
    const auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 4);
    const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iterations);
    if (iterations >= static_cast<std::uintmax_t>(kRootIterations)) {
        throw NumericalError("bench_tau_inverse: root finder did not converge");
    }
    return 0.5 * (a + b);
}

// Each conditional sampler inverts h(u2 | u1) = level for the draws (u1, level).
std::array<double, 2> clayton_pair(double theta, double u, double level) {
    const double v = std::pow((std::pow(level, -theta / (1.0 + theta)) - 1.0) * std::pow(u, -theta) + 1.0, -1.0 / theta);
    return {u, v};
}

std::array<double, 2> gumbel_pair(double theta, double u, double level) {
    // h = exp(x - A) (x / A)^(theta - 1) with x = -log u1, A = (x^theta + y^theta)^(1/theta).
    // Solve for A >= x, which is decreasing in h, then recover y = -log u2.
    const double x = -std::log(u);
    const double log_level = std::log(level);
    auto g = [&](double a) { return a - x + (theta - 1.0) * (std::log(a) - std::log(x)) + log_level; };
    const double a = increasing_root(g, x, std::max(1.0, x));
    const double y = std::pow(std::max(0.0, std::pow(a, theta) - std::pow(x, theta)), 1.0 / theta);
    return {u, std::exp(-y)};
}

std::array<double, 2> frank_pair(double theta, double u, double level) {
    const double v =
        -std::log1p(level * std::expm1(-theta) / (level + (1.0 - level) * std::exp(-theta * u))) / theta;
    return {u, std::clamp(v, 0.0, 1.0)};
}

std::array<double, 2> joe_pair(double theta, double u, double level) {
    const double a = std::pow(1.0 - u, theta);
    auto h = [&](double v) {
        const double b = std::pow(1.0 - v, theta);
        const double s = a + b - a * b;
        return std::pow(s, 1.0 / theta - 1.0) * std::pow(1.0 - u, theta - 1.0) * (1.0 - b) - level;
    };
    std::uintmax_t iterations = kRootIterations;
    const auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2);
    const auto [lo, hi] = boost::math::tools::toms748_solve(h, 0.0, 1.0, -level, 1.0 - level, tol, iterations);
    return {u, 0.5 * (lo + hi)};
}

}  // namespace

std::string_view benchmark_name(Benchmark b) {
    switch (b) {
        case Benchmark::ClaytonSurvival: return "clayton_survival";
        case Benchmark::Gumbel: return "gumbel";
        case Benchmark::Frank: return "frank";
        case Benchmark::Joe: return "joe";
    }
    return "";
}

std::optional<Benchmark> parse_benchmark(std::string_view name) {
    for (Benchmark b : {Benchmark::ClaytonSurvival, Benchmark::Gumbel, Benchmark::Frank, Benchmark::Joe}) {
        if (benchmark_name(b) == name) return b;
    }
    return std::nullopt;
}

BenchmarkFamily::BenchmarkFamily(Benchmark name, double param) : name_(name), param_(param) {
    if (!std::isfinite(param)) throw DomainError("benchmark parameter must be finite");
    switch (name) {
        case Benchmark::ClaytonSurvival:
            if (!(param > 0.0)) throw DomainError("clayton_survival: theta must be > 0");
            break;
        case Benchmark::Gumbel:
            if (!(param >= 1.0)) throw DomainError("gumbel: theta must be >= 1");
            break;
        case Benchmark::Frank:
            if (param == 0.0) throw DomainError("frank: theta must be non-zero");
            break;
        case Benchmark::Joe:
            if (!(param >= 1.0)) throw DomainError("joe: theta must be >= 1");
            break;
    }
}

double bench_cdf(const BenchmarkFamily& f, double u1, double u2) {
    if (!(u1 >= 0.0 && u1 <= 1.0 && u2 >= 0.0 && u2 <= 1.0)) {
        throw DomainError("bench_cdf: coordinates must lie in [0, 1]");
    }
    if (u1 == 0.0 || u2 == 0.0) return 0.0;
    if (u1 == 1.0) return u2;
    if (u2 == 1.0) return u1;
    const double theta = f.param();
    switch (f.name()) {
        case Benchmark::ClaytonSurvival:
            return std::max(0.0, u1 + u2 - 1.0 + clayton_cdf(theta, 1.0 - u1, 1.0 - u2));
        case Benchmark::Gumbel: return gumbel_cdf(theta, u1, u2);
        case Benchmark::Frank: return frank_cdf(theta, u1, u2);
        case Benchmark::Joe: return joe_cdf(theta, u1, u2);
    }
    return 0.0;
}

double bench_tau(const BenchmarkFamily& f) {
    const double theta = f.param();
    switch (f.name()) {
        case Benchmark::ClaytonSurvival: return theta / (theta + 2.0);
        case Benchmark::Gumbel: return 1.0 - 1.0 / theta;
        case Benchmark::Frank: return frank_tau(theta);
        case Benchmark::Joe: return theta == 1.0 ? 0.0 : joe_tau(theta);
    }
    return 0.0;
}

double bench_tau_inverse(Benchmark name, double tau) {
    if (!std::isfinite(tau)) throw DomainError("bench_tau_inverse: tau must be finite");
    switch (name) {
        case Benchmark::ClaytonSurvival:
            if (!(tau > 0.0 && tau < 1.0)) throw DomainError("clayton_survival attains tau only in (0, 1)");
            return 2.0 * tau / (1.0 - tau);
        case Benchmark::Gumbel:
            if (!(tau >= 0.0 && tau < 1.0)) throw DomainError("gumbel attains tau only in [0, 1)");
            return 1.0 / (1.0 - tau);
        case Benchmark::Frank: {
            if (!(std::abs(tau) < 1.0) || tau == 0.0) throw DomainError("frank attains tau only in (-1, 0) and (0, 1)");
            const double theta = increasing_root([&](double th) { return frank_tau(th) - std::abs(tau); }, 1e-3, 1.0);
            return tau < 0.0 ? -theta : theta;
        }
        case Benchmark::Joe:
            if (!(tau >= 0.0 && tau < 1.0)) throw DomainError("joe attains tau only in [0, 1)");
            if (tau == 0.0) return 1.0;
            return increasing_root([&](double th) { return bench_tau(BenchmarkFamily(Benchmark::Joe, th)) - tau; },
                                   1.0, 1.0);
    }
    return 0.0;
}

std::array<double, 2> bench_sample_pair(const BenchmarkFamily& f, RngStream& rng) {
    const double u = rng.uniform_positive();
    const double level = rng.uniform_positive();
    const double theta = f.param();
    switch (f.name()) {
        case Benchmark::ClaytonSurvival: {
            const auto [a, b] = clayton_pair(theta, u, level);
            return {1.0 - a, 1.0 - b};
        }
        case Benchmark::Gumbel: return gumbel_pair(theta, u, level);
        case Benchmark::Frank: return frank_pair(theta, u, level);
        case Benchmark::Joe: return joe_pair(theta, u, level);
    }
    return {u, level};
}

PseudoSample bench_sample(const BenchmarkFamily& f, std::size_t n, const RngStream& rng) {
    if (n == 0) throw DomainError("bench_sample: n must be at least 1");
    PseudoSample out;
    out.rows.resize(n);
    const std::size_t blocks = (n + kSampleBlock - 1) / kSampleBlock;
    parallel_for(blocks, [&](std::size_t b) {
        RngStream stream = rng.split(b);
        const std::size_t end = std::min(n, (b + 1) * kSampleBlock);
        for (std::size_t i = b * kSampleBlock; i < end; ++i) out.rows[i] = bench_sample_pair(f, stream);
    });
    return out;
}

}  // namespace pdcop

#include "pdcop/copula.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pdcop/errors.hpp"
#include "pdcop/monotone.hpp"

namespace pdcop {
namespace {

double effective(const Lambda& lambda) {
    switch (lambda.branch()) {
        case Branch::NegOne: return -1.0;
        case Branch::Zero: return 0.0;
        default: return lambda.value();
    }
}

double expm1_ratio(double c, double log_x) {
    if (c == 0.0) return log_x;
    return std::expm1(c * log_x) / c;
}

double generator_sum(const Lambda& lambda, double u1, double u2) {
    return phi(lambda, u1) + phi(lambda, u2);
}

bool near_neg_two(const Lambda& lambda) { return lambda.near(-2.0); }

}  // namespace

UnitVector::UnitVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("unit vector must have at least one coordinate");
    for (double u : coords_) {
        if (!(u >= 0.0 && u <= 1.0)) throw DomainError("unit vector coordinates must lie in [0, 1]");
    }
}

bool proven_valid(const Lambda& lambda, int dim) {
    if (dim == 2) return true;
    const bool completely_monotone = lambda.branch() == Branch::NegOne || near_neg_two(lambda);
    if (dim == 3) {
        const double l = lambda.value();
        return completely_monotone || (l > -1.0 && l <= -0.5);
    }
    return completely_monotone;
}

PdCopula::PdCopula(Lambda lambda, int dim, GatePolicy policy)
    : lambda_(lambda), dim_(dim), phi0_(phi_at_zero(lambda)) {
    if (dim < 2) throw DomainError("copula dimension must be at least 2");
    if (!proven_valid(lambda_, dim_)) {
        const std::string where = "lambda = " + std::to_string(lambda_.value()) + ", d = " + std::to_string(dim_);
        if (policy == GatePolicy::ProvenOnly) {
            std::string why = dim_ == 3
                ? "in three dimensions validity is established only for lambda in (-1, -0.5] and lambda = -2"
                : "for d >= 4 validity is established only for lambda in {-1, -2}";
            if (lambda_.value() > 0.0) why = "the pseudo-inverse is not d-monotone for lambda > 0 and any d >= 3";
            throw ValidityError(where + ": " + why + "; use the force-after-check policy to test numerically");
        }
        const MonotoneReport report = check_d_monotone(lambda_, dim_);
        if (!report.passed) {
            throw ValidityError(where + ": numerical d-monotonicity check failed: " + report.reason);
        }
    }
    const double l = effective(lambda_);
    singular_mass_ = l > 0.0 ? l / (l + 1.0) : 0.0;
}

double cdf(const PdCopula& c, const UnitVector& u) {
    if (static_cast<int>(u.size()) != c.dim()) throw DomainError("cdf: point dimension does not match the copula");
    double t = 0.0;
    for (double x : u.coords()) {
        if (x == 0.0) return 0.0;
        t += phi(c.lambda(), x);
    }
    return pseudo_inverse(c.lambda(), t);
}

double cdf(const PdCopula& c, double u1, double u2) {
    if (c.dim() != 2) throw DomainError("cdf: point dimension does not match the copula");
    if (!(u1 >= 0.0 && u1 <= 1.0 && u2 >= 0.0 && u2 <= 1.0)) throw DomainError("cdf: coordinates must lie in [0, 1]");
    if (u1 == 0.0 || u2 == 0.0) return 0.0;
    return pseudo_inverse(c.lambda(), generator_sum(c.lambda(), u1, u2));
}

double density(const PdCopula& c, double u1, double u2) {
    if (c.dim() != 2) throw DomainError("density: only the bivariate density is available");
    if (!(u1 > 0.0 && u1 < 1.0 && u2 > 0.0 && u2 < 1.0)) {
        throw DomainError("density: coordinates must lie in the open unit square");
    }
    const Lambda& lambda = c.lambda();
    const double t = generator_sum(lambda, u1, u2);
    if (!lambda.is_strict()) {
        const double cutoff = lambda.value() > 0.0 ? c.phi0() - kInverseTol : c.phi0();
        if (t >= cutoff) throw UndefinedDensityError("density: point lies on or beyond the zero curve");
    }
    const double v = pseudo_inverse(lambda, t);
    if (v == 0.0) throw UndefinedDensityError("density: copula value underflows to 0");
    const double d_v = phi_prime(lambda, v);
    return -phi_second(lambda, v) * phi_prime(lambda, u1) * phi_prime(lambda, u2) / (d_v * d_v * d_v);
}

double density(const PdCopula& c, const UnitVector& u) {
    if (u.size() != 2) throw DomainError("density: point must be bivariate");
    return density(c, u[0], u[1]);
}

double kendall_function(const PdCopula& c, double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("kendall_function: s must lie in (0, 1)");
    // K(s) = s - phi(s)/phi'(s) = (l/(l+1)) (s^(l+1) - 1) / (s^l - 1)
    const double l = effective(c.lambda());
    const double a = l + 1.0;
    const double log_s = std::log(s);
    const double k = expm1_ratio(a, log_s) / expm1_ratio(l, log_s);
    if (std::isfinite(k)) return k;
    // l < -1 and s^l overflows: multiply through by q = s^(-l)
    const double q = std::exp(-l * log_s);
    return l / a * (s - q) / (1.0 - q);
}

bool in_zero_set(const PdCopula& c, double u1, double u2) {
    if (u1 == 0.0 || u2 == 0.0) return true;
    if (c.lambda().is_strict()) return false;
    return generator_sum(c.lambda(), u1, u2) >= c.phi0();
}

bool in_zero_set(const PdCopula& c, const UnitVector& u) {
    if (u.size() != 2) throw DomainError("in_zero_set: point must be bivariate");
    return in_zero_set(c, u[0], u[1]);
}

bool on_zero_curve(const PdCopula& c, double u1, double u2, double tol) {
    if (c.lambda().is_strict()) return false;
    return std::abs(generator_sum(c.lambda(), u1, u2) - c.phi0()) <= tol;
}

ZeroCurve zero_curve(const PdCopula& c, const std::vector<double>& u1_grid) {
    ZeroCurve curve;
    if (c.lambda().is_strict()) {
        curve.degenerate = true;
        return curve;
    }
    curve.points.reserve(u1_grid.size());
    for (double u1 : u1_grid) {
        if (!(u1 >= 0.0 && u1 <= 1.0)) {
            curve.points.emplace_back(u1, std::nullopt);
            continue;
        }
        const double t = std::max(0.0, c.phi0() - phi(c.lambda(), u1));
        curve.points.emplace_back(u1, pseudo_inverse(c.lambda(), t));
    }
    return curve;
}

}  // namespace pdcop
